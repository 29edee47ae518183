#ifndef INDRAM_ARROW_HPP
#define INDRAM_ARROW_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "indram/canonical.hpp"
#include "indram/coloring.hpp"
#include "indram/embed.hpp"
#include "indram/graph.hpp"

namespace indram {

enum class Outcome { Arrows, NotArrows, Unknown };

struct SearchStats {
  std::uint64_t nodes = 0;
  std::size_t g_copies = 0;
  std::size_t h_copies = 0;
};

struct ArrowingVerdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<EdgeColoring> witness;  // good colouring, NotArrows only
  SearchStats stats;
};

struct BadCopy {
  Colour colour;
  Embedding embedding;
};

// Good iff no red induced g and no blue induced h. Definitional check,
// independent of the copy-mask engine below; brute_force_arrowing and all
// witness validation go through here.
inline std::optional<BadCopy> verify_coloring(const Graph& host,
                                              const EdgeColoring& c,
                                              const Graph& g, const Graph& h) {
  if (auto e = find_mono_induced(host, c, Colour::Red, g))
    return BadCopy{Colour::Red, *e};
  if (auto e = find_mono_induced(host, c, Colour::Blue, h))
    return BadCopy{Colour::Blue, *e};
  return std::nullopt;
}

inline std::optional<BadCopy> verify_coloring_weak(const Graph& host,
                                                   const EdgeColoring& c,
                                                   const Graph& g,
                                                   const Graph& h) {
  if (auto e = find_mono_weak(host, c, Colour::Red, g))
    return BadCopy{Colour::Red, *e};
  if (auto e = find_mono_weak(host, c, Colour::Blue, h))
    return BadCopy{Colour::Blue, *e};
  return std::nullopt;
}

namespace detail {

// Backtracking over edge colours on precomputed copy masks. A copy of g is
// violated when all its edges are red; dually for h. Unit propagation: a
// copy with no opposite-coloured edge and one uncoloured edge forces that
// edge to the opposite colour.
class ArrowSearch {
 public:
  ArrowSearch(const Graph& host, const Graph& g, const Graph& h,
              std::uint64_t budget, bool weak)
      : host_(host), he_(host), budget_(budget), weak_(weak) {
    if (weak) {
      g_copies_ = weak_copy_masks(host, he_, g);
      h_copies_ = weak_copy_masks(host, he_, h);
    } else {
      g_copies_ = induced_copy_masks(host, he_, g);
      h_copies_ = induced_copy_masks(host, he_, h);
    }
    symmetric_ = canonical_key(g) == canonical_key(h);
    build_order();
  }

  ArrowingVerdict run(const Graph& g, const Graph& h) {
    ArrowingVerdict v;
    v.stats.g_copies = g_copies_.size();
    v.stats.h_copies = h_copies_.size();
    int m = he_.count();

    // A copy with no edges is monochromatic under every colouring.
    auto edgeless = [](const std::vector<EdgeSet>& cs) {
      return std::any_of(cs.begin(), cs.end(),
                         [](const EdgeSet& c) { return c.empty(); });
    };
    if (edgeless(g_copies_) || edgeless(h_copies_)) {
      v.outcome = Outcome::Arrows;
      return v;
    }
    if (g_copies_.empty()) {
      v.witness = EdgeColoring::uniform(m, Colour::Red);
      v.outcome = Outcome::NotArrows;
      return v;
    }
    if (h_copies_.empty()) {
      v.witness = EdgeColoring::uniform(m, Colour::Blue);
      v.outcome = Outcome::NotArrows;
      return v;
    }

    EdgeSet assigned, red, blue;
    if (symmetric_ && m > 0) {
      // Colour-swap symmetry: a good colouring exists iff one exists with
      // the first search edge red. Only sound when g and h are isomorphic.
      int e = order_[0];
      assigned.set(e);
      red.set(e);
    }
    Result r = dfs(assigned, red, blue);
    v.stats.nodes = nodes_;
    switch (r) {
      case Result::Found:
        v.outcome = Outcome::NotArrows;
        v.witness = EdgeColoring::from_red_mask(m, found_red_);
        break;
      case Result::Exhausted:
        v.outcome = Outcome::Arrows;
        break;
      case Result::Budget:
        v.outcome = Outcome::Unknown;
        break;
    }
    return v;
  }

 private:
  enum class Result { Found, Exhausted, Budget };

  void build_order() {
    int m = he_.count();
    std::vector<int> weight(m, 0);
    for (const auto& c : g_copies_)
      for (int e = 0; e < m; ++e)
        if (c.test(e)) ++weight[e];
    for (const auto& c : h_copies_)
      for (int e = 0; e < m; ++e)
        if (c.test(e)) ++weight[e];
    order_.resize(m);
    for (int e = 0; e < m; ++e) order_[e] = e;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return weight[a] > weight[b]; });
  }

  // Returns conflict flag; on success leaves masks at fixpoint.
  bool propagate(EdgeSet& assigned, EdgeSet& red, EdgeSet& blue) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : g_copies_) {
        if (c.intersects(blue)) continue;
        EdgeSet un = c.andnot(assigned);
        if (un.empty()) return true;  // fully red copy of g
        if (un.count() == 1) {
          assigned = assigned | un;
          blue = blue | un;
          changed = true;
        }
      }
      for (const auto& c : h_copies_) {
        if (c.intersects(red)) continue;
        EdgeSet un = c.andnot(assigned);
        if (un.empty()) return true;  // fully blue copy of h
        if (un.count() == 1) {
          assigned = assigned | un;
          red = red | un;
          changed = true;
        }
      }
    }
    return false;
  }

  Result dfs(EdgeSet assigned, EdgeSet red, EdgeSet blue) {
    if (++nodes_ > budget_) return Result::Budget;
    if (propagate(assigned, red, blue)) return Result::Exhausted;
    int next = -1;
    for (int e : order_)
      if (!assigned.test(e)) {
        next = e;
        break;
      }
    if (next < 0) {
      found_red_ = red;
      return Result::Found;
    }
    for (Colour col : {Colour::Red, Colour::Blue}) {
      EdgeSet a = assigned, r = red, b = blue;
      a.set(next);
      (col == Colour::Red ? r : b).set(next);
      Result res = dfs(a, r, b);
      if (res != Result::Exhausted) return res;
    }
    return Result::Exhausted;
  }

  const Graph& host_;
  HostEdges he_;
  std::uint64_t budget_;
  bool weak_;
  bool symmetric_ = false;
  std::vector<EdgeSet> g_copies_, h_copies_;
  std::vector<int> order_;
  std::uint64_t nodes_ = 0;
  EdgeSet found_red_;
};

}  // namespace detail

inline ArrowingVerdict decide_arrowing(const Graph& host, const Graph& g,
                                       const Graph& h,
                                       std::uint64_t budget = 50'000'000) {
  detail::ArrowSearch s(host, g, h, budget, /*weak=*/false);
  ArrowingVerdict v = s.run(g, h);
  if (v.outcome == Outcome::NotArrows &&
      verify_coloring(host, *v.witness, g, h))
    throw std::logic_error("arrow engine produced an invalid witness");
  return v;
}

inline ArrowingVerdict decide_weak_arrowing(const Graph& host, const Graph& g,
                                            const Graph& h,
                                            std::uint64_t budget = 50'000'000) {
  detail::ArrowSearch s(host, g, h, budget, /*weak=*/true);
  ArrowingVerdict v = s.run(g, h);
  if (v.outcome == Outcome::NotArrows &&
      verify_coloring_weak(host, *v.witness, g, h))
    throw std::logic_error("arrow engine produced an invalid weak witness");
  return v;
}

// Definitional oracle: all 2^|E| colourings through verify_coloring.
inline ArrowingVerdict brute_force_arrowing(const Graph& host, const Graph& g,
                                            const Graph& h) {
  HostEdges he(host);
  int m = he.count();
  if (m > 24) throw std::invalid_argument("brute force oracle: > 24 edges");
  ArrowingVerdict v;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    EdgeSet red{mask, 0};
    EdgeColoring c = EdgeColoring::from_red_mask(m, red);
    ++v.stats.nodes;
    if (!verify_coloring(host, c, g, h)) {
      v.outcome = Outcome::NotArrows;
      v.witness = c;
      return v;
    }
  }
  v.outcome = Outcome::Arrows;
  return v;
}

}  // namespace indram

#endif  // INDRAM_ARROW_HPP
