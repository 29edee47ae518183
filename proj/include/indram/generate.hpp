#ifndef INDRAM_GENERATE_HPP
#define INDRAM_GENERATE_HPP

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "indram/canonical.hpp"
#include "indram/embed.hpp"
#include "indram/graph.hpp"

namespace indram {

constexpr int kGenerationCeiling = 10;

struct GenFilter {
  bool connected_only = false;
  std::optional<int> min_edges;
  std::optional<int> max_edges;
  std::vector<Graph> must_contain_induced;

  bool passes(const Graph& g) const {
    if (connected_only && !is_connected(g)) return false;
    if (min_edges && g.edge_count() < *min_edges) return false;
    if (max_edges && g.edge_count() > *max_edges) return false;
    for (const Graph& p : must_contain_induced)
      if (!find_induced(g, p)) return false;
    return true;
  }
};

namespace detail {

// One representative per isomorphism class, by canonical augmentation:
// every order-n class arises from some (n-1)-parent by attaching a new
// vertex to a neighbourhood subset, and is kept when the new vertex lies in
// the canonical last orbit. Isomorphic children of the same parent via
// automorphic subsets are deduplicated by canonical key.
inline const std::vector<Graph>& graph_classes(int order) {
  static std::vector<std::vector<Graph>> cache{{}, {Graph(1)}};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (order < 1 || order > kGenerationCeiling)
    throw std::invalid_argument("generation order out of range [1,10]");
  while (static_cast<int>(cache.size()) <= order) {
    int n = static_cast<int>(cache.size());
    const std::vector<Graph>& parents = cache[n - 1];
    std::vector<Graph> out;
    std::set<CanonicalKey> seen;
    for (const Graph& parent : parents) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t(1) << (n - 1)); ++nb) {
        Graph child(n);
        for (int u = 0; u < n - 1; ++u) {
          for (int v = u + 1; v < n - 1; ++v)
            if (parent.adjacent(u, v)) child.add_edge(u, v);
          if ((nb >> u) & 1u) child.add_edge(u, n - 1);
        }
        if (!in_canonical_last_orbit(child, n - 1)) continue;
        if (seen.insert(canonical_key(child)).second) out.push_back(child);
      }
    }
    cache.push_back(std::move(out));
  }
  return cache[order];
}

}  // namespace detail

// Streams one representative per isomorphism class passing the filter.
// Deterministic emission order; consumer returns false to stop early.
// Returns true when the stream ran to completion.
inline bool generate(int order, const GenFilter& filter,
                     const std::function<bool(const Graph&)>& consumer) {
  for (const Graph& g : detail::graph_classes(order)) {
    if (!filter.passes(g)) continue;
    if (!consumer(g)) return false;
  }
  return true;
}

inline std::size_t count_graphs(int order, const GenFilter& filter = {}) {
  std::size_t n = 0;
  generate(order, filter, [&](const Graph&) {
    ++n;
    return true;
  });
  return n;
}

inline std::vector<Graph> all_graphs(int order, const GenFilter& filter = {}) {
  std::vector<Graph> out;
  generate(order, filter, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace indram

#endif  // INDRAM_GENERATE_HPP
