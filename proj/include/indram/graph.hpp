#ifndef INDRAM_GRAPH_HPP
#define INDRAM_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indram {

// Simple undirected graph on dense vertices 0..n-1, n <= 62.
// Adjacency rows are 64-bit masks so induced-subgraph tests are bit-parallel.
class Graph {
 public:
  static constexpr int kMaxOrder = 62;

  Graph() = default;
  explicit Graph(int order) : n_(order), adj_(order, 0) {
    if (order < 0 || order > kMaxOrder)
      throw std::invalid_argument("graph order out of range [0,62]");
  }

  int order() const { return n_; }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    adj_[u] |= std::uint64_t(1) << v;
    adj_[v] |= std::uint64_t(1) << u;
  }

  std::uint64_t neighbours(int v) const { return adj_[v]; }

  int degree(int v) const { return std::popcount(adj_[v]); }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
  }

  // Edges as (u,v) pairs with u < v, in lexicographic order. This order is
  // the edge-index convention used by colourings and witness files.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  Graph complement() const {
    Graph c(n_);
    for (int v = 0; v < n_; ++v)
      c.adj_[v] = ~adj_[v] & vertex_mask() & ~(std::uint64_t(1) << v);
    return c;
  }

  // Subgraph induced by the vertices in `mask`, relabelled to 0..k-1 in
  // ascending original order.
  Graph induced(std::uint64_t mask) const {
    std::vector<int> verts;
    for (int v = 0; v < n_; ++v)
      if ((mask >> v) & 1u) verts.push_back(v);
    Graph sub(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (adjacent(verts[i], verts[j]))
          sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return sub;
  }

  // perm[v] = new label of v.
  Graph relabelled(const std::vector<int>& perm) const {
    Graph out(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.add_edge(perm[u], perm[v]);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) out.add_edge(u, v);
  int off = g.order();
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (h.adjacent(u, v)) out.add_edge(off + u, off + v);
  return out;
}

// t vertex-disjoint copies of g.
inline Graph copies(int t, const Graph& g) {
  if (t < 1) throw std::invalid_argument("copy count must be >= 1");
  Graph out = g;
  for (int i = 1; i < t; ++i) out = disjoint_union(out, g);
  return out;
}

// --- standard families -----------------------------------------------------

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Star with n edges: centre 0 plus n leaves (n+1 vertices).
inline Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1 edges");
  Graph g(n + 1);
  for (int v = 1; v <= n; ++v) g.add_edge(0, v);
  return g;
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("multipartite needs parts");
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("part size must be >= 1");
    n += p;
  }
  Graph g(n);
  int a = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int b = a + parts[i];
    for (int u = a; u < b; ++u)
      for (int v = b; v < n; ++v) g.add_edge(u, v);
    a = b;
  }
  return g;
}

inline Graph empty_graph(int n) {
  if (n < 1) throw std::invalid_argument("empty graph needs n >= 1");
  return Graph(n);
}

// --- basic parameters ------------------------------------------------------

namespace detail {

inline int mis_recurse(const Graph& g, std::uint64_t cand, int current,
                       int& best) {
  if (!cand) {
    if (current > best) best = current;
    return current;
  }
  if (current + std::popcount(cand) <= best) return 0;
  int v = std::countr_zero(cand);
  // take v
  mis_recurse(g, cand & ~g.neighbours(v) & ~(std::uint64_t(1) << v),
              current + 1, best);
  // skip v
  mis_recurse(g, cand & ~(std::uint64_t(1) << v), current, best);
  return best;
}

}  // namespace detail

inline int independence_number(const Graph& g) {
  int best = 0;
  detail::mis_recurse(g, g.vertex_mask(), 0, best);
  return best;
}

// omega computed as alpha of the complement: one exhaustive kernel.
inline int clique_number(const Graph& g) {
  return independence_number(g.complement());
}

// Connected components as vertex masks, ordered by smallest member.
inline std::vector<std::uint64_t> components(const Graph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((seen >> v) & 1u) continue;
    std::uint64_t comp = std::uint64_t(1) << v;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int u = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbours(u);
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  return g.order() <= 1 || components(g).size() == 1;
}

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

struct GraphParameters {
  int independence_number = 0;
  int clique_number = 0;
  bool connected = false;
  std::vector<std::uint64_t> components;
};

inline GraphParameters parameters(const Graph& g) {
  GraphParameters p;
  p.independence_number = independence_number(g);
  p.clique_number = clique_number(g);
  p.components = components(g);
  p.connected = g.order() <= 1 || p.components.size() == 1;
  return p;
}

}  // namespace indram

#endif  // INDRAM_GRAPH_HPP
