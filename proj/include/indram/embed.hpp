#ifndef INDRAM_EMBED_HPP
#define INDRAM_EMBED_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "indram/canonical.hpp"
#include "indram/coloring.hpp"
#include "indram/graph.hpp"

namespace indram {

// Injective map from pattern vertices to host vertices.
// For induced embeddings: pattern-adjacent(u,v) iff host-adjacent(map(u),map(v)).
struct Embedding {
  std::vector<int> map;  // indexed by pattern vertex
};

inline bool is_valid_induced(const Graph& host, const Graph& pattern,
                             const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.order()) return false;
  for (int u = 0; u < pattern.order(); ++u)
    for (int v = u + 1; v < pattern.order(); ++v)
      if (pattern.adjacent(u, v) != host.adjacent(e.map[u], e.map[v]))
        return false;
  return true;
}

inline bool is_valid_weak(const Graph& host, const Graph& pattern,
                          const Embedding& e) {
  for (int u = 0; u < pattern.order(); ++u)
    for (int v = u + 1; v < pattern.order(); ++v)
      if (pattern.adjacent(u, v) && !host.adjacent(e.map[u], e.map[v]))
        return false;
  return true;
}

namespace detail {

// Placement plan: components in canonical order (identical components
// adjacent), vertices BFS-ordered within each component so every placed
// vertex after the component root has an already-placed neighbour.
struct PatternPlan {
  std::vector<int> order;               // position -> pattern vertex
  std::vector<std::uint64_t> prev_adj;  // position -> mask over earlier
                                        // positions that are pattern-adjacent
  std::vector<int> comp_of_pos;
  std::vector<int> comp_last_pos;       // component -> last position
  std::vector<bool> same_as_prev;       // component iso to previous one
  std::vector<int> mindeg;              // position -> pattern degree
};

inline PatternPlan make_plan(const Graph& pattern) {
  PatternPlan plan;
  auto comps = components(pattern);
  struct CompInfo {
    std::uint64_t mask;
    CanonicalKey key;
  };
  std::vector<CompInfo> infos;
  for (auto m : comps)
    infos.push_back({m, canonical_key(pattern.induced(m))});
  std::stable_sort(infos.begin(), infos.end(),
                   [](const CompInfo& a, const CompInfo& b) {
                     int ca = std::popcount(a.mask), cb = std::popcount(b.mask);
                     if (ca != cb) return ca > cb;
                     return a.key < b.key;
                   });
  for (std::size_t ci = 0; ci < infos.size(); ++ci) {
    plan.same_as_prev.push_back(ci > 0 && infos[ci].key == infos[ci - 1].key);
    // BFS from max-degree vertex (ties: smallest id)
    std::uint64_t m = infos[ci].mask;
    int root = -1, best = -1;
    for (int v = 0; v < pattern.order(); ++v)
      if (((m >> v) & 1u) && pattern.degree(v) > best) {
        best = pattern.degree(v);
        root = v;
      }
    std::vector<int> bfs{root};
    std::uint64_t seen = std::uint64_t(1) << root;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      std::uint64_t nb = pattern.neighbours(bfs[i]) & m & ~seen;
      while (nb) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        seen |= std::uint64_t(1) << v;
        bfs.push_back(v);
      }
    }
    for (int v : bfs) {
      int pos = static_cast<int>(plan.order.size());
      std::uint64_t pa = 0;
      for (int j = 0; j < pos; ++j)
        if (pattern.adjacent(plan.order[j], v)) pa |= std::uint64_t(1) << j;
      plan.order.push_back(v);
      plan.prev_adj.push_back(pa);
      plan.comp_of_pos.push_back(static_cast<int>(ci));
      plan.mindeg.push_back(pattern.degree(v));
    }
    plan.comp_last_pos.push_back(static_cast<int>(plan.order.size()) - 1);
  }
  return plan;
}

struct WalkOptions {
  bool induced = true;
  bool break_component_symmetry = true;
  // For monochromatic search: adjacency between images must use edges of
  // this colour. adj_col[v] is the colour-restricted neighbourhood mask.
  const std::vector<std::uint64_t>* adj_col = nullptr;
};

// Visits embeddings; visitor returns false to stop. Returns true when the
// search ran to completion.
inline bool walk(const Graph& host, const Graph& pattern,
                 const PatternPlan& plan, const WalkOptions& opt,
                 const std::function<bool(const Embedding&)>& visit) {
  int hp = pattern.order();
  if (hp > host.order()) return true;
  if (hp == 0) return visit(Embedding{});
  std::vector<int> img(hp, -1);
  std::uint64_t used = 0;
  const std::uint64_t full = host.vertex_mask();

  // min image vertex per component, for symmetry breaking
  std::vector<int> comp_min(plan.comp_last_pos.size(), -1);

  std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos == hp) {
      Embedding e;
      e.map.resize(hp);
      for (int i = 0; i < hp; ++i) e.map[plan.order[i]] = img[i];
      return visit(e);
    }
    std::uint64_t allowed = full & ~used;
    std::uint64_t pa = plan.prev_adj[pos];
    for (int j = 0; j < pos; ++j) {
      bool padj = (pa >> j) & 1u;
      if (padj) {
        allowed &= opt.adj_col ? (*opt.adj_col)[img[j]]
                               : host.neighbours(img[j]);
      } else if (opt.induced) {
        allowed &= ~host.neighbours(img[j]);
      }
      if (!allowed) return true;
    }
    int comp = plan.comp_of_pos[pos];
    while (allowed) {
      int w = std::countr_zero(allowed);
      allowed &= allowed - 1;
      if (host.degree(w) < plan.mindeg[pos]) continue;
      img[pos] = w;
      used |= std::uint64_t(1) << w;
      int saved_min = comp_min[comp];
      if (saved_min < 0 || w < saved_min) comp_min[comp] = w;
      bool go = true;
      if (opt.break_component_symmetry && pos == plan.comp_last_pos[comp] &&
          plan.same_as_prev[comp] &&
          comp_min[comp] <= comp_min[comp - 1])
        go = false;  // identical components forced into increasing min order
      if (go && !rec(pos + 1)) return false;
      comp_min[comp] = saved_min;
      used &= ~(std::uint64_t(1) << w);
      img[pos] = -1;
    }
    return true;
  };
  return rec(0);
}

inline std::vector<std::uint64_t> colour_adjacency(const Graph& host,
                                                   const EdgeColoring& c,
                                                   Colour col) {
  HostEdges he(host);
  if (c.colour.size() != he.list.size())
    throw std::invalid_argument("partial colouring rejected");
  std::vector<std::uint64_t> adj(host.order(), 0);
  for (int e = 0; e < he.count(); ++e) {
    if (c.colour[e] != col) continue;
    auto [u, v] = he.list[e];
    adj[u] |= std::uint64_t(1) << v;
    adj[v] |= std::uint64_t(1) << u;
  }
  return adj;
}

}  // namespace detail

inline std::optional<Embedding> find_induced(const Graph& host,
                                             const Graph& pattern) {
  auto plan = detail::make_plan(pattern);
  std::optional<Embedding> found;
  detail::walk(host, pattern, plan, {}, [&](const Embedding& e) {
    found = e;
    return false;
  });
  if (found) assert(is_valid_induced(host, pattern, *found));
  return found;
}

// Monochromatic induced copy: induced in the full host and all image edges
// carry the given colour. (Induced means every host edge between image
// vertices is a pattern edge, so the colour constraint covers them all.)
inline std::optional<Embedding> find_mono_induced(const Graph& host,
                                                  const EdgeColoring& c,
                                                  Colour col,
                                                  const Graph& pattern) {
  auto plan = detail::make_plan(pattern);
  auto adj = detail::colour_adjacency(host, c, col);
  detail::WalkOptions opt;
  opt.adj_col = &adj;
  std::optional<Embedding> found;
  detail::walk(host, pattern, plan, opt, [&](const Embedding& e) {
    found = e;
    return false;
  });
  if (found) assert(is_valid_induced(host, pattern, *found));
  return found;
}

inline std::optional<Embedding> find_weak(const Graph& host,
                                          const Graph& pattern) {
  auto plan = detail::make_plan(pattern);
  detail::WalkOptions opt;
  opt.induced = false;
  std::optional<Embedding> found;
  detail::walk(host, pattern, plan, opt, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

inline std::optional<Embedding> find_mono_weak(const Graph& host,
                                               const EdgeColoring& c,
                                               Colour col,
                                               const Graph& pattern) {
  auto plan = detail::make_plan(pattern);
  auto adj = detail::colour_adjacency(host, c, col);
  detail::WalkOptions opt;
  opt.induced = false;
  opt.adj_col = &adj;
  std::optional<Embedding> found;
  detail::walk(host, pattern, plan, opt, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

// Visits every induced embedding. With dedup_vertex_sets, copies with equal
// vertex sets collapse to one. Without it, all injective maps are visited
// (identical components still placed in canonical order). Returns false if
// the visitor stopped early.
inline bool enumerate_induced(const Graph& host, const Graph& pattern,
                              bool dedup_vertex_sets,
                              const std::function<bool(const Embedding&)>& visit) {
  auto plan = detail::make_plan(pattern);
  detail::WalkOptions opt;
  opt.break_component_symmetry = dedup_vertex_sets;
  std::set<std::uint64_t> seen;
  return detail::walk(host, pattern, plan, opt, [&](const Embedding& e) {
    assert(is_valid_induced(host, pattern, e));
    if (dedup_vertex_sets) {
      std::uint64_t m = 0;
      for (int w : e.map) m |= std::uint64_t(1) << w;
      if (!seen.insert(m).second) return true;
    }
    return visit(e);
  });
}

inline std::size_t count_induced(const Graph& host, const Graph& pattern,
                                 bool dedup_vertex_sets) {
  std::size_t n = 0;
  enumerate_induced(host, pattern, dedup_vertex_sets, [&](const Embedding&) {
    ++n;
    return true;
  });
  return n;
}

// Copy lists for the arrowing engine: one edge mask per copy.
// Induced copies are identified with their vertex set; the mask holds every
// host edge inside that set.
inline std::vector<EdgeSet> induced_copy_masks(const Graph& host,
                                               const HostEdges& he,
                                               const Graph& pattern) {
  std::vector<EdgeSet> out;
  enumerate_induced(host, pattern, /*dedup=*/true, [&](const Embedding& e) {
    std::uint64_t m = 0;
    for (int w : e.map) m |= std::uint64_t(1) << w;
    EdgeSet es;
    for (int ei = 0; ei < he.count(); ++ei) {
      auto [u, v] = he.list[ei];
      if (((m >> u) & 1u) && ((m >> v) & 1u)) es.set(ei);
    }
    out.push_back(es);
    return true;
  });
  return out;
}

// Weak (not necessarily induced) copies, identified with the set of host
// edges that realise the pattern's edges.
inline std::vector<EdgeSet> weak_copy_masks(const Graph& host,
                                            const HostEdges& he,
                                            const Graph& pattern) {
  auto plan = detail::make_plan(pattern);
  detail::WalkOptions opt;
  opt.induced = false;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::vector<EdgeSet> out;
  detail::walk(host, pattern, plan, opt, [&](const Embedding& e) {
    EdgeSet es;
    for (int u = 0; u < pattern.order(); ++u)
      for (int v = u + 1; v < pattern.order(); ++v)
        if (pattern.adjacent(u, v)) es.set(he.id(e.map[u], e.map[v]));
    if (seen.insert({es.w0, es.w1}).second) out.push_back(es);
    return true;
  });
  return out;
}

}  // namespace indram

#endif  // INDRAM_EMBED_HPP
