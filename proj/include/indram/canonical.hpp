#ifndef INDRAM_CANONICAL_HPP
#define INDRAM_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "indram/graph.hpp"
#include "indram/graph6.hpp"

namespace indram {

// Total-order key with key(G) == key(H) iff G and H are isomorphic.
struct CanonicalKey {
  std::string bytes;  // graph6 of the canonical form
  auto operator<=>(const CanonicalKey&) const = default;
};

namespace detail {

// Backtracking search for the lexicographically least adjacency encoding.
// The encoding is read column by column: position k contributes the bits
// x(0,k), ..., x(k-1,k). The least string is always reachable greedily, so
// at each level we branch only over candidates whose column is minimal.
// "Twin" candidates (vertices with identical neighbourhoods modulo each
// other) produce identical subtrees and are skipped, which keeps complete
// and empty graphs linear instead of factorial.
class CanonSearch {
 public:
  CanonSearch(const Graph& g, int pin) : g_(g), n_(g.order()), pin_(pin) {
    cur_.assign(n_, -1);
    cols_.assign(n_, 0);
  }

  void run() {
    if (n_ == 0) {
      have_best_ = true;
      return;
    }
    dfs(0);
  }

  bool found() const { return have_best_; }
  // best_perm()[pos] = original vertex placed at canonical position pos.
  const std::vector<int>& best_placement() const { return best_cur_; }

 private:
  void dfs(int pos) {
    if (pos == n_) {
      if (!have_best_ || lex_less(cols_, best_cols_)) {
        best_cols_ = cols_;
        best_cur_ = cur_;
        have_best_ = true;
      }
      return;
    }
    // candidate set
    std::vector<int> cand;
    if (pin_ >= 0 && pos == n_ - 1) {
      cand.push_back(pin_);
    } else {
      for (int v = 0; v < n_; ++v)
        if (!((used_ >> v) & 1u) && v != pin_) cand.push_back(v);
      if (pin_ >= 0 && cand.empty()) cand.push_back(pin_);
    }
    // column value for each candidate; keep only the minimal ones
    std::uint64_t minv = ~std::uint64_t(0);
    std::vector<std::pair<int, std::uint64_t>> tied;
    for (int v : cand) {
      std::uint64_t col = 0;
      for (int j = 0; j < pos; ++j)
        col = (col << 1) | (g_.adjacent(cur_[j], v) ? 1u : 0u);
      if (col < minv) {
        minv = col;
        tied.clear();
      }
      if (col == minv) tied.emplace_back(v, col);
    }
    // prune against best-so-far
    if (have_best_) {
      int c = prefix_compare(pos, minv);
      if (c > 0) return;
    }
    std::vector<int> tried;
    for (auto [v, col] : tied) {
      bool skip = false;
      for (int u : tried) {
        std::uint64_t diff = (g_.neighbours(u) ^ g_.neighbours(v)) &
                             ~((std::uint64_t(1) << u) | (std::uint64_t(1) << v));
        if (diff == 0) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      tried.push_back(v);
      cur_[pos] = v;
      cols_[pos] = col;
      used_ |= std::uint64_t(1) << v;
      if (!have_best_ || prefix_compare(pos + 1, 0, true) <= 0) dfs(pos + 1);
      used_ &= ~(std::uint64_t(1) << v);
      cur_[pos] = -1;
    }
  }

  // Compare cols_[0..pos-1] + next against best prefix. Column k has k bits,
  // so numeric comparison per level is lexicographic.
  int prefix_compare(int pos, std::uint64_t next, bool no_next = false) const {
    for (int k = 0; k < pos; ++k) {
      if (cols_[k] != best_cols_[k]) return cols_[k] < best_cols_[k] ? -1 : 1;
    }
    if (no_next) return 0;
    if (next != best_cols_[pos]) return next < best_cols_[pos] ? -1 : 1;
    return 0;
  }

  static bool lex_less(const std::vector<std::uint64_t>& a,
                       const std::vector<std::uint64_t>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  }

  const Graph& g_;
  int n_;
  int pin_;
  std::uint64_t used_ = 0;
  std::vector<int> cur_, best_cur_;
  std::vector<std::uint64_t> cols_, best_cols_;
  bool have_best_ = false;
};

inline Graph canonical_relabel(const Graph& g, const std::vector<int>& placement) {
  std::vector<int> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[placement[pos]] = pos;
  return g.relabelled(perm);
}

}  // namespace detail

inline Graph canonical_form(const Graph& g) {
  if (g.order() == 0) return g;
  detail::CanonSearch s(g, -1);
  s.run();
  return detail::canonical_relabel(g, s.best_placement());
}

inline CanonicalKey canonical_key(const Graph& g) {
  return CanonicalKey{graph6_encode(canonical_form(g))};
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_key(g) == canonical_key(h);
}

// True iff v lies in the automorphism orbit of the vertex carrying the last
// canonical label: the least encoding with v pinned to position n-1 equals
// the unrestricted least encoding. Drives canonical-augmentation generation.
inline bool in_canonical_last_orbit(const Graph& g, int v) {
  if (g.order() == 1) return v == 0;
  detail::CanonSearch pinned(g, v);
  pinned.run();
  Graph a = detail::canonical_relabel(g, pinned.best_placement());
  return a == canonical_form(g);
}

}  // namespace indram

#endif  // INDRAM_CANONICAL_HPP
