#ifndef INDRAM_RAMSEY_HPP
#define INDRAM_RAMSEY_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <tuple>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "indram/arrow.hpp"
#include "indram/canonical.hpp"
#include "indram/coloring.hpp"
#include "indram/generate.hpp"
#include "indram/graph.hpp"
#include "indram/strategies.hpp"

namespace indram {

enum class IrStatus { Exact, Bounds, Unknown };

struct WitnessRecord {
  Graph host;
  EdgeColoring colouring;
};

struct SweptOrder {
  int order = 0;
  bool connected_only = false;
  std::vector<WitnessRecord> witnesses;
};

struct ArrowRecord {
  Graph host;
  std::string via;  // "sweep" or a construction description
  std::uint64_t nodes = 0;
};

// Exact value v requires an order-v Arrows host plus NotArrows witnesses for
// every host at order v-1 (connected-only when the multicopy reduction
// applies; see SweptOrder::connected_only).
struct IRResult {
  Graph g, h;
  IrStatus status = IrStatus::Unknown;
  int value = -1;
  int lo = 1;
  int hi = -1;  // -1: no upper bound known
  std::optional<ArrowRecord> arrow;
  std::vector<SweptOrder> swept;
  std::uint64_t total_nodes = 0;
};

// Always-valid closed-form lower bounds. The Gorgol bound requires g
// connected; the |V(g)|+2 bound applies against 2K_2 when g has no
// isolated vertices.
inline int ir_lower(const Graph& g, const Graph& h) {
  int lo = std::max({1, g.order(), h.order()});
  if (g.order() >= 1 && is_connected(g))
    lo = std::max(lo, gorgol_lower_bound(independence_number(g),
                                         clique_number(h)));
  if (is_isomorphic(h, copies(2, complete_graph(2))) &&
      !has_isolated_vertex(g) && g.order() >= 1)
    lo = std::max(lo, g.order() + 2);
  return lo;
}

struct IrOptions {
  int order_cap = 10;
  std::uint64_t budget = 50'000'000;
  int jobs = 0;  // 0: hardware concurrency
};

struct Construction {
  int order = 0;
  Graph host;
  std::string description;
};

namespace detail {

// Decompose into s pairwise-isomorphic components; (1, g) when connected.
inline std::optional<std::pair<int, Graph>> as_copies(const Graph& g) {
  auto comps = components(g);
  if (comps.empty()) return std::nullopt;
  Graph base = g.induced(comps[0]);
  CanonicalKey key = canonical_key(base);
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (canonical_key(g.induced(comps[i])) != key) return std::nullopt;
  return std::make_pair(static_cast<int>(comps.size()), base);
}

struct SweepOutcome {
  int arrows_index = -1;
  bool unknown_before_decision = false;  // Unknown seen with no Arrows found
  std::vector<ArrowingVerdict> verdicts;  // aligned with hosts; outcome
                                          // Unknown for skipped entries
  std::uint64_t nodes = 0;
};

inline SweepOutcome sweep_hosts(const std::vector<Graph>& hosts,
                                const Graph& g, const Graph& h,
                                std::uint64_t budget, int jobs,
                                bool stop_on_arrows, bool weak = false) {
  SweepOutcome out;
  out.verdicts.resize(hosts.size());
  if (hosts.empty()) return out;
  if (jobs <= 0)
    jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(jobs), hosts.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
  std::vector<char> decided(hosts.size(), 0);
  std::mutex err_mu;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      while (!stop.load(std::memory_order_relaxed)) {
        std::size_t i = next.fetch_add(1);
        if (i >= hosts.size()) return;
        ArrowingVerdict v = weak
            ? decide_weak_arrowing(hosts[i], g, h, budget)
            : decide_arrowing(hosts[i], g, h, budget);
        nodes += v.stats.nodes;
        out.verdicts[i] = std::move(v);
        decided[i] = 1;
        if (stop_on_arrows && out.verdicts[i].outcome == Outcome::Arrows)
          stop.store(true);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!error) error = std::current_exception();
      stop.store(true);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  out.nodes = nodes.load();
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    if (!decided[i]) break;  // skipped after early stop
    if (out.verdicts[i].outcome == Outcome::Arrows) {
      out.arrows_index = static_cast<int>(i);
      break;
    }
    if (out.verdicts[i].outcome == Outcome::Unknown)
      out.unknown_before_decision = true;
  }
  return out;
}

inline std::vector<Graph> hosts_by_density(int order, bool connected_only) {
  GenFilter f;
  f.connected_only = connected_only;
  std::vector<Graph> hosts = all_graphs(order, f);
  std::stable_sort(hosts.begin(), hosts.end(),
                   [](const Graph& a, const Graph& b) {
                     return a.edge_count() > b.edge_count();
                   });
  return hosts;
}

}  // namespace detail

// Exact IR computation with certificates; memoizes by canonical pair so the
// verification harness shares work across claims.
class IrSolver {
 public:
  explicit IrSolver(IrOptions opts = {}) : opts_(opts) {}

  const IrOptions& options() const { return opts_; }

  IRResult ir_exact(const Graph& g, const Graph& h) {
    return ir_exact_impl(g, h, 0);
  }

  // Constructions from the literature, each confirmed by decide_arrowing before
  // being returned.
  std::optional<Construction> ir_upper_by_construction(const Graph& g,
                                                       const Graph& h) {
    return upper_impl(g, h, 0);
  }

  // IR(g, t * h_base) via the decomposition reduction: a minimal host
  // beating every additive decomposition must be connected, so only
  // connected hosts are swept below the decomposition bound.
  IRResult ir_exact_multicopy(const Graph& g, const Graph& h_base, int t) {
    if (t < 1) throw std::invalid_argument("multicopy needs t >= 1");
    if (t == 1) return ir_exact(g, h_base);
    auto key = std::make_tuple(canonical_key(g).bytes,
                               canonical_key(h_base).bytes, t);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = multi_memo_.find(key);
      if (it != multi_memo_.end()) return it->second;
    }

    std::vector<IRResult> f(t + 1);
    bool all_exact = true;
    for (int i = 1; i < t; ++i) {
      f[i] = ir_exact_multicopy(g, h_base, i);
      if (f[i].status != IrStatus::Exact) all_exact = false;
    }
    Graph h = copies(t, h_base);
    if (!all_exact) return ir_exact(g, h);

    // best additive decomposition
    std::vector<int> dp(t + 1, std::numeric_limits<int>::max());
    std::vector<int> split(t + 1, 0);
    dp[0] = 0;
    for (int i = 1; i <= t; ++i)
      for (int j = 1; j <= i && j < t; ++j)
        if (dp[i - j] != std::numeric_limits<int>::max() &&
            f[j].value + dp[i - j] < dp[i]) {
          dp[i] = f[j].value + dp[i - j];
          split[i] = j;
        }
    int dec = dp[t];
    Graph dec_host(0);
    {
      int rem = t;
      bool first = true;
      while (rem > 0) {
        int j = split[rem];
        const Graph& part = f[j].arrow->host;
        dec_host = first ? part : disjoint_union(dec_host, part);
        first = false;
        rem -= j;
      }
    }

    IRResult res;
    res.g = g;
    res.h = h;
    res.lo = ir_lower(g, h);
    res.hi = dec;
    const int start = res.lo;
    bool decided = false;
    for (int n = res.lo; n < dec && n <= opts_.order_cap; ++n) {
      auto hosts = detail::hosts_by_density(n, /*connected_only=*/true);
      auto sw = detail::sweep_hosts(hosts, g, h, opts_.budget, opts_.jobs,
                                    /*stop_on_arrows=*/true);
      res.total_nodes += sw.nodes;
      if (sw.arrows_index >= 0) {
        res.status = IrStatus::Exact;
        res.value = n;
        res.arrow = ArrowRecord{hosts[sw.arrows_index], "connected sweep",
                                sw.verdicts[sw.arrows_index].stats.nodes};
        decided = true;
        break;
      }
      if (sw.unknown_before_decision) {
        res.status = IrStatus::Bounds;
        res.lo = n;
        decided = true;
        break;
      }
      SweptOrder so;
      so.order = n;
      so.connected_only = true;
      for (std::size_t i = 0; i < hosts.size(); ++i)
        so.witnesses.push_back({hosts[i], *sw.verdicts[i].witness});
      res.swept.push_back(std::move(so));
    }
    if (!decided) {
      if (dec - 1 <= opts_.order_cap || res.lo >= dec) {
        res.status = IrStatus::Exact;
        res.value = dec;
        res.arrow = ArrowRecord{dec_host, "disjoint decomposition", 0};
      } else {  // cap hit before reaching dec
        res.status = IrStatus::Bounds;
        res.lo = std::max(res.lo, opts_.order_cap + 1);
      }
    }
    // The certificate needs order value-1 witnessed (connected hosts; the
    // decomposition bound rules out disconnected ones). Sweep it now when the
    // lower bound made the loop start at the value itself.
    if (res.status == IrStatus::Exact && res.value == start &&
        res.swept.empty() && res.value - 1 >= 1) {
      auto hosts = detail::hosts_by_density(res.value - 1,
                                            /*connected_only=*/true);
      auto sw = detail::sweep_hosts(hosts, g, h, opts_.budget, opts_.jobs,
                                    /*stop_on_arrows=*/true);
      res.total_nodes += sw.nodes;
      if (sw.arrows_index >= 0)
        throw std::logic_error(
            "ir_exact_multicopy: proven lower bound contradicted by an "
            "arrowing host");
      if (sw.unknown_before_decision) {
        res.status = IrStatus::Bounds;
        res.lo = res.value - 1;
        res.hi = res.value;
        res.value = -1;
        res.arrow.reset();
      } else {
        SweptOrder so;
        so.order = res.value - 1;
        so.connected_only = true;
        for (std::size_t i = 0; i < hosts.size(); ++i)
          so.witnesses.push_back({hosts[i], *sw.verdicts[i].witness});
        res.swept.push_back(std::move(so));
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    multi_memo_.emplace(key, res);
    return res;
  }

 private:
  using PairKey = std::pair<std::string, std::string>;

  PairKey pair_key(const Graph& g, const Graph& h) const {
    return {canonical_key(g).bytes, canonical_key(h).bytes};
  }

  IRResult ir_exact_impl(const Graph& g, const Graph& h, int depth) {
    PairKey key = pair_key(g, h);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    IRResult res;
    res.g = g;
    res.h = h;
    res.lo = ir_lower(g, h);
    auto cons = upper_impl(g, h, depth);
    res.hi = cons ? cons->order : -1;

    int value = -1;
    std::optional<ArrowRecord> arrow;
    bool tainted = false;
    int n = res.lo;
    for (; n <= opts_.order_cap; ++n) {
      if (cons && n == cons->order) {
        value = n;
        arrow = ArrowRecord{cons->host, cons->description, 0};
        break;
      }
      auto hosts = detail::hosts_by_density(n, false);
      auto sw = detail::sweep_hosts(hosts, g, h, opts_.budget, opts_.jobs,
                                    /*stop_on_arrows=*/true);
      res.total_nodes += sw.nodes;
      if (sw.arrows_index >= 0) {
        value = n;
        arrow = ArrowRecord{hosts[sw.arrows_index], "sweep",
                            sw.verdicts[sw.arrows_index].stats.nodes};
        break;
      }
      if (sw.unknown_before_decision) {
        tainted = true;
        res.lo = n;
        break;
      }
      SweptOrder so;
      so.order = n;
      for (std::size_t i = 0; i < hosts.size(); ++i)
        so.witnesses.push_back({hosts[i], *sw.verdicts[i].witness});
      res.swept.push_back(std::move(so));
    }

    // A construction at the first unswept order still closes the value:
    // every smaller order is witnessed NotArrows and the host arrows.
    if (value < 0 && !tainted && cons && n == cons->order) {
      value = n;
      arrow = ArrowRecord{cons->host, cons->description, 0};
    }

    if (value >= 0) {
      // The certificate needs order value-1 fully witnessed; sweep it now
      // when the lower bound made the loop start at the value itself.
      if (value - 1 >= 1 && res.swept.empty() && value == res.lo) {
        auto hosts = detail::hosts_by_density(value - 1, false);
        auto sw = detail::sweep_hosts(hosts, g, h, opts_.budget, opts_.jobs,
                                      /*stop_on_arrows=*/true);
        res.total_nodes += sw.nodes;
        if (sw.arrows_index >= 0)
          throw std::logic_error(
              "ir_exact: proven lower bound contradicted by an arrowing host");
        if (sw.unknown_before_decision) {
          tainted = true;
          res.lo = value - 1;
          res.hi = value;
          value = -1;
        } else {
          SweptOrder so;
          so.order = value - 1;
          for (std::size_t i = 0; i < hosts.size(); ++i)
            so.witnesses.push_back({hosts[i], *sw.verdicts[i].witness});
          res.swept.push_back(std::move(so));
        }
      }
    }

    if (value >= 0) {
      res.status = IrStatus::Exact;
      res.value = value;
      res.arrow = arrow;
    } else if (tainted) {
      res.status = IrStatus::Bounds;
    } else {
      // cap exhausted
      res.status = res.hi >= 0 ? IrStatus::Bounds : IrStatus::Unknown;
      res.lo = std::max(res.lo, std::min(n, opts_.order_cap + 1));
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(key, res);
    return res;
  }

  std::optional<Construction> upper_impl(const Graph& g, const Graph& h,
                                         int depth) {
    PairKey key = pair_key(g, h);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cons_memo_.find(key);
      if (it != cons_memo_.end()) return it->second;
    }
    std::vector<Construction> candidates;
    auto add_candidate = [&](Graph host, std::string desc) {
      candidates.push_back(
          {host.order(), std::move(host), std::move(desc)});
    };

    auto gs = detail::as_copies(g);
    auto hs = detail::as_copies(h);

    // (a) multiple copies of a base pair: (s+t-1) copies of a base host
    if (depth < 3 && gs && hs && gs->first + hs->first >= 3) {
      IRResult base = ir_exact_impl(gs->second, hs->second, depth + 1);
      if (base.status == IrStatus::Exact && base.arrow) {
        int k = gs->first + hs->first - 1;
        add_candidate(copies(k, base.arrow->host),
                      "observation: " + std::to_string(k) +
                          " copies of a base arrowing host");
      }
    }

    bool h_is_2k2 = is_isomorphic(h, copies(2, complete_graph(2)));
    bool h_is_matching =
        hs && is_isomorphic(hs->second, complete_graph(2));
    int t_match = h_is_matching ? hs->first : 0;

    int pn = g.order();
    bool g_is_path = pn >= 4 && is_isomorphic(g, path_graph(pn));

    // (b)/(c) paths versus 2K_2: the cycle construction
    if (h_is_2k2 && g_is_path)
      add_candidate(cycle_graph(pn >= 5 ? pn + 2 : 7),
                    "cycle construction for paths vs 2K_2");

    // (d) paths versus tK_2, t >= 3: ceil(t/2) cycles, plus a path if t odd
    if (t_match >= 3 && g_is_path) {
      Graph cyc = cycle_graph(pn >= 5 ? pn + 2 : 7);
      Graph host = copies(t_match / 2, cyc);
      if (t_match % 2 == 1) host = disjoint_union(host, path_graph(pn));
      add_candidate(std::move(host), "cycle/path mixture for paths vs tK_2");
    }

    // (e) h with several component classes: union of per-class hosts
    // (no red g anywhere forces a blue induced copy in each block)
    if (depth < 3 && !hs) {
      auto comps = components(h);
      std::map<std::string, std::pair<int, Graph>> groups;
      for (auto m : comps) {
        Graph c = h.induced(m);
        auto [it, fresh] =
            groups.try_emplace(canonical_key(c).bytes, 0, c);
        it->second.first += 1;
      }
      Graph host(0);
      bool ok = true, first = true;
      for (auto& [k, grp] : groups) {
        IRResult part =
            ir_exact_impl(g, copies(grp.first, grp.second), depth + 1);
        if (part.status != IrStatus::Exact || !part.arrow) {
          ok = false;
          break;
        }
        host = first ? part.arrow->host
                     : disjoint_union(host, part.arrow->host);
        first = false;
      }
      if (ok && !first)
        add_candidate(std::move(host), "union of per-component-class hosts");
    }

    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Construction& a, const Construction& b) {
                       return a.order < b.order;
                     });
    std::optional<Construction> best;
    for (auto& cand : candidates) {
      if (cand.host.edge_count() > EdgeSet::kMaxEdges) continue;
      ArrowingVerdict v = decide_arrowing(cand.host, g, h, opts_.budget);
      if (v.outcome == Outcome::Arrows) {
        best = std::move(cand);
        break;
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    cons_memo_.emplace(key, best);
    return best;
  }

  IrOptions opts_;
  std::mutex mu_;
  std::map<PairKey, IRResult> memo_;
  std::map<PairKey, std::optional<Construction>> cons_memo_;
  std::map<std::tuple<std::string, std::string, int>, IRResult> multi_memo_;
};

inline IRResult ir_exact(const Graph& g, const Graph& h, IrOptions opts = {}) {
  IrSolver solver(opts);
  return solver.ir_exact(g, h);
}

inline IRResult ir_exact_multicopy(const Graph& g, const Graph& h_base, int t,
                                   IrOptions opts = {}) {
  IrSolver solver(opts);
  return solver.ir_exact_multicopy(g, h_base, t);
}

inline std::optional<Construction> ir_upper_by_construction(
    const Graph& g, const Graph& h, IrOptions opts = {}) {
  IrSolver solver(opts);
  return solver.ir_upper_by_construction(g, h);
}

}  // namespace indram

#endif  // INDRAM_RAMSEY_HPP
