#include <doctest.h>

#include <map>
#include <string>

#include "indram/claims.hpp"
#include "indram/verify.hpp"

using namespace indram;

namespace {

ClaimReportEntry run_claim(const std::string& id, IrSolver& solver,
                           Profile profile = Profile::Quick) {
  ClaimContext ctx{solver, profile};
  for (const ClaimRecord& rec : claims_table())
    if (rec.id == id) return verify_claim(rec, ctx);
  FAIL("no claim with id ", id);
  return {};
}

}  // namespace

TEST_CASE("the claims table covers the maintained census exactly once each") {
  std::map<std::string, int> seen;
  for (const ClaimRecord& rec : claims_table()) {
    ++seen[rec.id];
    CHECK_FALSE(rec.id.empty());
    CHECK_FALSE(rec.citation.empty());
    CHECK_FALSE(rec.anchor.empty());
    CHECK(rec.check != nullptr);
  }
  for (const std::string& id : expected_claim_ids()) {
    CAPTURE(id);
    CHECK(seen[id] == 1);
  }
  CHECK(seen.size() == expected_claim_ids().size());
}

TEST_CASE("cheap claims verify against the shared solver") {
  IrOptions opts;
  opts.order_cap = 8;
  IrSolver solver(opts);

  auto a = run_claim("two-matchings", solver);
  CHECK(a.status == ClaimStatus::Verified);

  auto b = run_claim("gorgol-lower-bound", solver);
  CHECK(b.status == ClaimStatus::BoundsConsistent);

  auto c = run_claim("ir-equals-classical", solver);
  CHECK(c.status == ClaimStatus::Verified);

  auto d = run_claim("matchings-vs-clique", solver);
  CHECK(d.status == ClaimStatus::Verified);
}

TEST_CASE("status vocabulary is stable") {
  CHECK(std::string(claim_status_name(ClaimStatus::Verified)) == "Verified");
  CHECK(std::string(claim_status_name(ClaimStatus::FAILED)) == "FAILED");
  CHECK(std::string(claim_status_name(ClaimStatus::Skipped)) == "Skipped");
  CHECK(std::string(feasibility_name(Feasibility::ExactDesk)) == "exact-desk");
  CHECK(std::string(feasibility_name(Feasibility::BoundsOnly)) ==
        "bounds-only");
}

TEST_CASE("report rendering is deterministic and honest about failure") {
  VerificationReport rep;
  rep.profile = Profile::Quick;
  rep.budget = 123;
  rep.seed = 7;
  ClaimReportEntry ok;
  ok.id = "sample-pass";
  ok.anchor = "a passing statement";
  ok.feasibility = Feasibility::ExactDesk;
  ok.status = ClaimStatus::Verified;
  ok.detail = {"evidence line"};
  ok.millis = 1.5;
  ClaimReportEntry bad = ok;
  bad.id = "sample-fail";
  bad.anchor = "a failing statement";
  bad.status = ClaimStatus::FAILED;
  rep.entries = {ok, bad};

  CHECK_FALSE(rep.all_passed());
  std::string text = report_to_text(rep);
  CHECK(text == report_to_text(rep));  // timing excluded by default
  CHECK(text.find("[Verified] sample-pass") != std::string::npos);
  CHECK(text.find("[FAILED] sample-fail") != std::string::npos);
  CHECK(text.find("evidence line") != std::string::npos);
  CHECK(text.find("2 claims, 1 failed, 0 skipped") != std::string::npos);
  CHECK(text.find(" ms]") == std::string::npos);
  CHECK(report_to_text(rep, true).find(" ms]") != std::string::npos);

  auto j = report_to_json(rep);
  CHECK(j["passed"] == false);
  CHECK(j["claims"].size() == 2);
  CHECK(j["claims"][0]["status"] == "Verified");
  CHECK_FALSE(j["claims"][0].contains("millis"));
}
