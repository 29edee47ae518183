#ifndef INDRAM_STRATEGIES_HPP
#define INDRAM_STRATEGIES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "indram/arrow.hpp"
#include "indram/coloring.hpp"
#include "indram/embed.hpp"
#include "indram/graph.hpp"

namespace indram {

// Lower bound for IR(G,H), G connected with independence number alpha,
// H with clique number omega.
inline int gorgol_lower_bound(int alpha, int omega) {
  if (alpha < 1 || omega < 1)
    throw std::invalid_argument("gorgol bound needs alpha, omega >= 1");
  return (alpha - 1) * omega * (omega - 1) / 2 + omega;
}

struct Bipartition {
  std::uint64_t v1 = 0, v2 = 0;
  bool certified = false;  // within-part induced matchings proven <= n/3
};

namespace detail {

// Largest number of matching edges with both endpoints inside one part,
// over all induced matchings of g. Stops early once `stop_above` is
// exceeded (returns that count).
inline int max_within_part_matching(const Graph& g, std::uint64_t v1,
                                    int stop_above) {
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  int best = 0;
  // choose edges in index order; forbidden = vertices adjacent to or in the
  // matching so far (induced condition)
  std::function<void(int, std::uint64_t, int)> rec =
      [&](int from, std::uint64_t closed, int within) {
        if (within > best) best = within;
        if (best > stop_above) return;
        for (int e = from; e < m; ++e) {
          auto [a, b] = edges[e];
          std::uint64_t ab =
              (std::uint64_t(1) << a) | (std::uint64_t(1) << b);
          if (closed & ab) continue;
          bool in1 = ((v1 >> a) & 1u) && ((v1 >> b) & 1u);
          bool in2 = !((v1 >> a) & 1u) && !((v1 >> b) & 1u);
          rec(e + 1, closed | ab | g.neighbours(a) | g.neighbours(b),
              within + ((in1 || in2) ? 1 : 0));
          if (best > stop_above) return;
        }
      };
  rec(0, 0, 0);
  return best;
}

}  // namespace detail

constexpr int kMatchingPartitionExhaustiveOrder = 12;

// Partition V(g) = V1 u V2 such that every induced matching has at most
// n/3 edges with both endpoints in one part. Counts are integral, so the
// bound is floor(n/3). Exhaustive over partitions for small orders; above
// the threshold, iterative repartitioning along a violating matching with a
// 10n step cap, and failure to certify is reported, not accepted.
inline Bipartition matching_partition(const Graph& g) {
  int n = g.order();
  Bipartition bp;
  if (n == 0) {
    bp.certified = true;
    return bp;
  }
  int limit = n / 3;
  if (n <= kMatchingPartitionExhaustiveOrder) {
    // vertex 0 fixed in V1; complementary partitions are equivalent
    for (std::uint64_t v1 = 1; v1 < (std::uint64_t(1) << n); v1 += 2) {
      if (detail::max_within_part_matching(g, v1, limit) <= limit) {
        bp.v1 = v1;
        bp.v2 = g.vertex_mask() & ~v1;
        bp.certified = true;
        return bp;
      }
    }
    throw std::runtime_error(
        "matching_partition: no certified bipartition found (exhaustive)");
  }
  // improvement iteration from the proof's repartition step
  std::uint64_t v1 = g.vertex_mask() & ((std::uint64_t(1) << (n / 2)) - 1);
  for (int step = 0; step < 10 * n; ++step) {
    // find a violating induced matching, if any
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::vector<int> viol;
    std::function<bool(int, std::uint64_t, std::vector<int>&)> rec =
        [&](int from, std::uint64_t closed, std::vector<int>& sel) -> bool {
      int within = 0;
      for (int e : sel) {
        auto [a, b] = edges[e];
        bool in1 = ((v1 >> a) & 1u) && ((v1 >> b) & 1u);
        bool in2 = !((v1 >> a) & 1u) && !((v1 >> b) & 1u);
        if (in1 || in2) ++within;
      }
      if (within > limit) {
        viol = sel;
        return true;
      }
      for (int e = from; e < m; ++e) {
        auto [a, b] = edges[e];
        std::uint64_t ab = (std::uint64_t(1) << a) | (std::uint64_t(1) << b);
        if (closed & ab) continue;
        sel.push_back(e);
        if (rec(e + 1, closed | ab | g.neighbours(a) | g.neighbours(b), sel))
          return true;
        sel.pop_back();
      }
      return false;
    };
    std::vector<int> sel;
    if (!rec(0, 0, sel)) {
      bp.v1 = v1;
      bp.v2 = g.vertex_mask() & ~v1;
      bp.certified = true;
      return bp;
    }
    // split every edge of the violating matching across the parts
    for (int e : viol) {
      auto [a, b] = edges[e];
      bool a1 = (v1 >> a) & 1u, b1 = (v1 >> b) & 1u;
      if (a1 == b1) v1 ^= std::uint64_t(1) << b;
    }
  }
  throw std::runtime_error(
      "matching_partition: improvement steps exhausted without certificate");
}

// Colouring from the IR(G,2K_2) >= |V(G)|+2 proof. Host has |V(g)|+1
// vertices; g has no isolated vertices. Returns nullopt when g is not an
// induced subgraph of host (caller colours all red).
inline std::optional<EdgeColoring> avoid_2k2_coloring(const Graph& host,
                                                      const Graph& g) {
  if (host.order() != g.order() + 1)
    throw std::invalid_argument("avoid_2k2: host must have |V(g)|+1 vertices");
  if (has_isolated_vertex(g))
    throw std::invalid_argument("avoid_2k2: g must have no isolated vertices");
  auto emb = find_induced(host, g);
  if (!emb) return std::nullopt;

  std::uint64_t image = 0;
  for (int w : emb->map) image |= std::uint64_t(1) << w;
  int v = std::countr_zero(host.vertex_mask() & ~image);
  // u: neighbour of v inside the copy if one exists, else arbitrary
  std::uint64_t nv = host.neighbours(v) & image;
  int u = nv ? std::countr_zero(nv) : std::countr_zero(image);
  // one edge of the copy incident to u (g has no isolated vertices, so the
  // copy has an edge at u)
  std::uint64_t cu = host.neighbours(u) & image;
  int u2 = std::countr_zero(cu);

  HostEdges he(host);
  EdgeColoring c = EdgeColoring::uniform(he.count(), Colour::Red);
  for (int e = 0; e < he.count(); ++e) {
    auto [a, b] = he.list[e];
    if (a == v || b == v) c.colour[e] = Colour::Blue;
  }
  c.colour[he.id(u, u2)] = Colour::Blue;
  if (verify_coloring(host, c, g, copies(2, complete_graph(2))))
    throw std::logic_error("avoid_2k2: constructed colouring is not good");
  return c;
}

// Partition the host into k-1 parts none of which induces g; red inside
// parts, blue across. The blue graph is (k-1)-partite, so the colouring is
// good for (g, H) for any H of chromatic number k.
inline std::optional<EdgeColoring> chromatic_partition_coloring(
    const Graph& host, const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("chromatic partition needs k >= 2");
  int parts = k - 1;
  int n = host.order();
  std::vector<int> part(n, -1);
  std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
    if (v == n) return true;
    int lim = std::min(parts, used + 1);  // part indices introduced in order
    for (int p = 0; p < lim; ++p) {
      part[v] = p;
      std::uint64_t mask = 0;
      for (int u = 0; u <= v; ++u)
        if (part[u] == p) mask |= std::uint64_t(1) << u;
      if (!find_induced(host.induced(mask), g) &&
          rec(v + 1, std::max(used, p + 1)))
        return true;
      part[v] = -1;
    }
    return false;
  };
  if (!rec(0, 0)) return std::nullopt;
  HostEdges he(host);
  EdgeColoring c = EdgeColoring::uniform(he.count(), Colour::Red);
  for (int e = 0; e < he.count(); ++e) {
    auto [a, b] = he.list[e];
    c.colour[e] = part[a] == part[b] ? Colour::Red : Colour::Blue;
  }
  return c;
}

// Colouring from the IR(K_3, tK_3) lower-bound proof: find an induced
// bundle of t triangles (a_i, b_i, c_i), bipartition the rest X = X' u X''
// by matching_partition, and colour a_ib_i, b_ic_i, the a_i-X' and c_i-X''
// stars, and everything between X' and X'' red; the rest blue. Returns
// nullopt when the host has no induced tK_3 (caller colours all blue).
inline std::optional<EdgeColoring> triangle_coloring(const Graph& host,
                                                     int t) {
  Graph bundle = copies(t, complete_graph(3));
  auto emb = find_induced(host, bundle);
  if (!emb) return std::nullopt;

  std::uint64_t bundle_mask = 0;
  for (int w : emb->map) bundle_mask |= std::uint64_t(1) << w;
  std::uint64_t x = host.vertex_mask() & ~bundle_mask;

  // map X back and forth for the partition of host[X]
  std::vector<int> xverts;
  for (int v = 0; v < host.order(); ++v)
    if ((x >> v) & 1u) xverts.push_back(v);
  Bipartition bp = matching_partition(host.induced(x));
  std::uint64_t x1 = 0, x2 = 0;
  for (std::size_t i = 0; i < xverts.size(); ++i)
    ((bp.v1 >> i) & 1u ? x1 : x2) |= std::uint64_t(1) << xverts[i];

  std::vector<int> a(t), b(t), cc(t);
  for (int i = 0; i < t; ++i) {
    a[i] = emb->map[3 * i];
    b[i] = emb->map[3 * i + 1];
    cc[i] = emb->map[3 * i + 2];
  }

  HostEdges he(host);
  EdgeColoring col = EdgeColoring::uniform(he.count(), Colour::Blue);
  auto paint_red = [&](int u, int v) {
    int e = he.id(u, v);
    if (e >= 0) col.colour[e] = Colour::Red;
  };
  for (int i = 0; i < t; ++i) {
    paint_red(a[i], b[i]);
    paint_red(b[i], cc[i]);
    for (int w : xverts) {
      if ((x1 >> w) & 1u) paint_red(a[i], w);
      if ((x2 >> w) & 1u) paint_red(cc[i], w);
    }
  }
  for (int u : xverts)
    for (int w : xverts)
      if (u < w && (((x1 >> u) & 1u) != ((x1 >> w) & 1u))) paint_red(u, w);
  return col;
}

}  // namespace indram

#endif  // INDRAM_STRATEGIES_HPP
