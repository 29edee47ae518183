#ifndef INDRAM_VERIFY_HPP
#define INDRAM_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "indram/claims.hpp"
#include "indram/ramsey.hpp"

namespace indram {

struct ClaimReportEntry {
  std::string id;
  std::string citation;
  std::string anchor;
  Feasibility feasibility = Feasibility::OutOfScope;
  ClaimStatus status = ClaimStatus::FAILED;
  std::vector<std::string> detail;
  double millis = 0.0;  // timing; excluded from deterministic output
};

struct VerificationReport {
  Profile profile = Profile::Quick;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::vector<ClaimReportEntry> entries;

  bool all_passed() const {
    for (const auto& e : entries)
      if (e.status == ClaimStatus::FAILED) return false;
    return true;
  }
};

inline ClaimReportEntry verify_claim(const ClaimRecord& rec,
                                     ClaimContext& ctx) {
  ClaimReportEntry e;
  e.id = rec.id;
  e.citation = rec.citation;
  e.anchor = rec.anchor;
  e.feasibility = rec.feasibility;
  auto t0 = std::chrono::steady_clock::now();
  ClaimResult r = rec.check(ctx);
  auto t1 = std::chrono::steady_clock::now();
  e.status = r.status;
  e.detail = std::move(r.detail);
  e.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return e;
}

// Runs every table entry in table order. Host-level fan-out inside the
// solver provides the parallelism; claims themselves run sequentially so
// they share one memoised solver and the report is deterministic.
inline VerificationReport verify_all(Profile profile,
                                     std::uint64_t budget = 50'000'000,
                                     int jobs = 0,
                                     std::uint64_t seed = 20260823) {
  IrOptions opts;
  opts.order_cap = 8;
  opts.budget = budget;
  opts.jobs = jobs;
  IrSolver solver(opts);
  ClaimContext ctx{solver, profile, budget, seed};

  VerificationReport rep;
  rep.profile = profile;
  rep.budget = budget;
  rep.seed = seed;
  for (const ClaimRecord& rec : claims_table())
    rep.entries.push_back(verify_claim(rec, ctx));
  return rep;
}

// Text rendering; identical across runs when include_timing is false.
inline std::string report_to_text(const VerificationReport& rep,
                                  bool include_timing = false) {
  std::ostringstream os;
  os << "claim verification ("
     << (rep.profile == Profile::Full ? "full" : "quick")
     << " profile, budget " << rep.budget << ", seed " << rep.seed << ")\n";
  std::size_t failed = 0, skipped = 0;
  for (const auto& e : rep.entries) {
    os << "[" << claim_status_name(e.status) << "] " << e.id << " ("
       << feasibility_name(e.feasibility) << "): " << e.anchor;
    if (include_timing) os << "  [" << e.millis << " ms]";
    os << "\n";
    for (const auto& d : e.detail) os << "    " << d << "\n";
    if (e.status == ClaimStatus::FAILED) ++failed;
    if (e.status == ClaimStatus::Skipped) ++skipped;
  }
  os << rep.entries.size() << " claims, " << failed << " failed, " << skipped
     << " skipped\n";
  return os.str();
}

inline nlohmann::json report_to_json(const VerificationReport& rep,
                                     bool include_timing = false) {
  nlohmann::json j;
  j["profile"] = rep.profile == Profile::Full ? "full" : "quick";
  j["budget"] = rep.budget;
  j["seed"] = rep.seed;
  j["claims"] = nlohmann::json::array();
  for (const auto& e : rep.entries) {
    nlohmann::json c;
    c["id"] = e.id;
    c["citation"] = e.citation;
    c["anchor"] = e.anchor;
    c["feasibility"] = feasibility_name(e.feasibility);
    c["status"] = claim_status_name(e.status);
    c["detail"] = e.detail;
    if (include_timing) c["millis"] = e.millis;
    j["claims"].push_back(std::move(c));
  }
  j["passed"] = rep.all_passed();
  return j;
}

// The independently maintained census of literature claims; the coverage
// test cross-references it against claims_table().
inline const std::vector<std::string>& expected_claim_ids() {
  static const std::vector<std::string> ids = {
      "ir-equals-classical",
      "gorgol-lower-bound",
      "copies-observation",
      "matchings-vs-clique",
      "two-matchings",
      "p3-vs-clique-unions",
      "p3-vs-clique-copies",
      "p3-vs-multipartite-unions",
      "p3-vs-multipartite-copies",
      "p3-vs-p4-copies",
      "many-copies-vs-2k2",
      "2k2-lower-bound",
      "2k2-sandwich",
      "paths-item-1",
      "paths-item-2",
      "paths-item-3",
      "paths-item-4",
      "paths-item-5",
      "paths-item-6",
      "paths-item-7",
      "paths-item-8",
      "paths-item-9",
      "p3-copies-vs-clique",
      "two-p3-vs-triangle",
      "classical-triangle-copies",
      "triangle-copies",
      "minimal-host-connected",
  };
  return ids;
}

}  // namespace indram

#endif  // INDRAM_VERIFY_HPP
