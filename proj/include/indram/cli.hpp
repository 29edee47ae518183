#ifndef INDRAM_CLI_HPP
#define INDRAM_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indram/arrow.hpp"
#include "indram/certificate.hpp"
#include "indram/family_expr.hpp"
#include "indram/generate.hpp"
#include "indram/graph6.hpp"
#include "indram/ramsey.hpp"
#include "indram/strategies.hpp"
#include "indram/verify.hpp"

namespace indram {

// Exit codes shared by all subcommands.
enum ExitCode {
  kExitOk = 0,          // decided as claimed / success
  kExitDiffers = 2,     // decided, but differently from the expectation
  kExitUndecided = 3,   // Unknown verdict / budget or cap exhausted
  kExitUsage = 4,       // bad arguments or malformed input
};

namespace detail {

inline int run_arrows(const std::string& host_s, const std::string& red_s,
                      const std::string& blue_s, std::uint64_t budget,
                      bool weak, const std::string& expect,
                      const std::string& out_path, std::ostream& out) {
  Graph host = parse_graph(host_s);
  Graph g = parse_graph(red_s);
  Graph h = parse_graph(blue_s);
  ArrowingVerdict v = weak ? decide_weak_arrowing(host, g, h, budget)
                           : decide_arrowing(host, g, h, budget);
  const char* name = v.outcome == Outcome::Arrows     ? "Arrows"
                     : v.outcome == Outcome::NotArrows ? "NotArrows"
                                                       : "Unknown";
  out << name << " nodes=" << v.stats.nodes << " g-copies=" << v.stats.g_copies
      << " h-copies=" << v.stats.h_copies << "\n";
  if (v.witness) {
    if (!out_path.empty()) {
      std::ofstream os(out_path, std::ios::binary);
      write_witness(os, host, *v.witness);
    } else {
      write_witness(out, host, *v.witness);
    }
  }
  if (v.outcome == Outcome::Unknown) return kExitUndecided;
  if (!expect.empty()) {
    bool want_arrows = expect == "arrows";
    bool got_arrows = v.outcome == Outcome::Arrows;
    if (want_arrows != got_arrows) return kExitDiffers;
  }
  return kExitOk;
}

inline int run_ir(const std::string& red_s, const std::string& blue_s, int cap,
                  std::uint64_t budget, int jobs, const std::string& out_dir,
                  std::ostream& out) {
  Graph g = parse_graph(red_s);
  Graph h = parse_graph(blue_s);
  IrOptions opts;
  opts.order_cap = cap;
  opts.budget = budget;
  opts.jobs = jobs;
  IrSolver solver(opts);
  IRResult res = solver.ir_exact(g, h);
  switch (res.status) {
    case IrStatus::Exact:
      out << "IR = " << res.value << " host=" << graph6_encode(res.arrow->host)
          << " via \"" << res.arrow->via << "\"\n";
      break;
    case IrStatus::Bounds:
      out << "IR in [" << res.lo << ", "
          << (res.hi >= 0 ? std::to_string(res.hi) : "inf") << "]\n";
      break;
    case IrStatus::Unknown:
      out << "IR >= " << res.lo << " (undecided)\n";
      break;
  }
  for (const auto& so : res.swept)
    out << "order " << so.order << ": " << so.witnesses.size()
        << (so.connected_only ? " connected" : "")
        << " hosts witnessed NotArrows\n";
  out << "search nodes: " << res.total_nodes << "\n";
  if (!out_dir.empty()) {
    write_bundle(out_dir, res);
    out << "bundle written to " << out_dir << "\n";
  }
  return res.status == IrStatus::Exact ? kExitOk : kExitUndecided;
}

inline int run_gen(int order, bool connected, std::optional<int> min_edges,
                   std::optional<int> max_edges, std::ostream& out) {
  GenFilter f;
  f.connected_only = connected;
  f.min_edges = min_edges;
  f.max_edges = max_edges;
  generate(order, f, [&](const Graph& g) {
    out << graph6_encode(g) << "\n";
    return true;
  });
  return kExitOk;
}

inline int run_embed(const std::string& host_s, const std::string& pattern_s,
                     bool weak, bool count, std::ostream& out) {
  Graph host = parse_graph(host_s);
  Graph pattern = parse_graph(pattern_s);
  if (count) {
    out << count_induced(host, pattern, /*dedup_vertex_sets=*/true) << "\n";
    return kExitOk;
  }
  auto emb = weak ? find_weak(host, pattern) : find_induced(host, pattern);
  if (!emb) {
    out << "not found\n";
    return kExitOk;
  }
  out << "found:";
  for (std::size_t i = 0; i < emb->map.size(); ++i)
    out << " " << i << "->" << emb->map[i];
  out << "\n";
  return kExitOk;
}

inline int run_strategy(const std::string& name, const std::string& host_s,
                        const std::string& pattern_s, int k, int t,
                        std::ostream& out, std::ostream& err) {
  Graph host = parse_graph(host_s);
  std::optional<EdgeColoring> col;
  if (name == "avoid-2k2") {
    if (pattern_s.empty()) {
      err << "strategy avoid-2k2 needs --pattern\n";
      return kExitUsage;
    }
    col = avoid_2k2_coloring(host, parse_graph(pattern_s));
  } else if (name == "chromatic-partition") {
    if (pattern_s.empty()) {
      err << "strategy chromatic-partition needs --pattern\n";
      return kExitUsage;
    }
    col = chromatic_partition_coloring(host, parse_graph(pattern_s), k);
  } else if (name == "triangle") {
    col = triangle_coloring(host, t);
  } else if (name == "matching-partition") {
    Bipartition bp = matching_partition(host);
    out << "V1:";
    for (int v = 0; v < host.order(); ++v)
      if ((bp.v1 >> v) & 1u) out << " " << v;
    out << "\nV2:";
    for (int v = 0; v < host.order(); ++v)
      if ((bp.v2 >> v) & 1u) out << " " << v;
    out << "\n";
    return kExitOk;
  } else {
    err << "unknown strategy: " << name << "\n";
    return kExitUsage;
  }
  if (!col) {
    out << "not applicable\n";
    return kExitUndecided;
  }
  write_witness(out, host, *col);
  return kExitOk;
}

inline int run_verify_paper(bool full, std::uint64_t budget, int jobs,
                            std::uint64_t seed, const std::string& json_path,
                            bool timing, std::ostream& out) {
  VerificationReport rep = verify_all(
      full ? Profile::Full : Profile::Quick, budget, jobs, seed);
  out << report_to_text(rep, timing);
  if (!json_path.empty()) {
    std::ofstream os(json_path, std::ios::binary);
    os << report_to_json(rep, timing).dump(2) << "\n";
  }
  return rep.all_passed() ? kExitOk : kExitDiffers;
}

inline int run_certify(const std::string& dir, std::ostream& out) {
  CertifyReport rep = certify_bundle(dir);
  for (const auto& p : rep.problems) out << "problem: " << p << "\n";
  out << (rep.ok ? "OK" : "INVALID") << ", " << rep.witnesses_checked
      << " witnesses validated\n";
  return rep.ok ? kExitOk : kExitDiffers;
}

}  // namespace detail

// Full command-line surface; returns a process exit code. Separated from
// main() so tests can drive it in-process.
inline int cli_main(std::vector<std::string> args, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"exact-search toolkit for induced Ramsey numbers"};
  app.require_subcommand(1);

  std::string host_s, red_s, blue_s, pattern_s, expect, out_path;
  std::uint64_t budget = 50'000'000;
  std::uint64_t seed = 20260823;
  int cap = 8, jobs = 0, order = 0, k = 3, t = 1;
  bool weak = false, connected = false, count = false, full = false,
       timing = false;
  std::optional<int> min_edges, max_edges;
  std::string strategy_name, json_path, bundle_dir;

  auto* arrows = app.add_subcommand("arrows", "decide strong arrowing");
  arrows->add_option("--host", host_s)->required();
  arrows->add_option("--red", red_s)->required();
  arrows->add_option("--blue", blue_s)->required();
  arrows->add_option("--budget", budget);
  arrows->add_flag("--weak", weak, "classical (non-induced) arrowing");
  arrows->add_option("--expect", expect)
      ->check(CLI::IsMember({"arrows", "notarrows"}));
  arrows->add_option("--out", out_path, "witness file for NotArrows");

  auto* ir = app.add_subcommand("ir", "compute the induced Ramsey number");
  ir->add_option("--red", red_s)->required();
  ir->add_option("--blue", blue_s)->required();
  ir->add_option("--cap", cap, "largest host order to sweep");
  ir->add_option("--budget", budget);
  ir->add_option("--jobs", jobs);
  ir->add_option("--out", out_path, "certificate bundle directory");

  auto* gen = app.add_subcommand("gen", "enumerate isomorphism classes");
  gen->add_option("order", order)->required()->check(CLI::Range(1, 10));
  gen->add_flag("--connected", connected);
  gen->add_option("--min-edges", min_edges);
  gen->add_option("--max-edges", max_edges);

  auto* embed = app.add_subcommand("embed", "find an induced embedding");
  embed->add_option("--host", host_s)->required();
  embed->add_option("--pattern", pattern_s)->required();
  embed->add_flag("--weak", weak, "subgraph rather than induced");
  embed->add_flag("--count", count, "count copies instead");

  auto* strat = app.add_subcommand("strategy", "run a colouring strategy");
  strat->add_option("name", strategy_name)
      ->required()
      ->check(CLI::IsMember({"avoid-2k2", "chromatic-partition", "triangle",
                             "matching-partition"}));
  strat->add_option("--host", host_s)->required();
  strat->add_option("--pattern", pattern_s);
  strat->add_option("--k", k, "chromatic number of the blue pattern");
  strat->add_option("--t", t, "number of triangles");

  auto* vp = app.add_subcommand("verify-paper", "check every literature claim");
  vp->add_flag("--full", full, "include the expensive sweeps");
  vp->add_option("--budget", budget);
  vp->add_option("--jobs", jobs);
  vp->add_option("--seed", seed, "seed for sampled checks (recorded)");
  vp->add_option("--json", json_path, "machine-readable summary file");
  vp->add_flag("--timing", timing, "include wall times (non-deterministic)");

  auto* cert = app.add_subcommand("certify", "re-validate a certificate bundle");
  cert->add_option("dir", bundle_dir)->required();

  try {
    std::vector<const char*> argv;
    argv.push_back("indram");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (arrows->parsed())
      return detail::run_arrows(host_s, red_s, blue_s, budget, weak, expect,
                                out_path, out);
    if (ir->parsed())
      return detail::run_ir(red_s, blue_s, cap, budget, jobs, out_path, out);
    if (gen->parsed())
      return detail::run_gen(order, connected, min_edges, max_edges, out);
    if (embed->parsed())
      return detail::run_embed(host_s, pattern_s, weak, count, out);
    if (strat->parsed())
      return detail::run_strategy(strategy_name, host_s, pattern_s, k, t, out,
                                  err);
    if (vp->parsed())
      return detail::run_verify_paper(full, budget, jobs, seed, json_path,
                                      timing, out);
    if (cert->parsed()) return detail::run_certify(bundle_dir, out);
  } catch (const ExprError& e) {
    err << "bad graph expression: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "bad graph6: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace indram

#endif  // INDRAM_CLI_HPP
