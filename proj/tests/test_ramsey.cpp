#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "indram/arrow.hpp"
#include "indram/certificate.hpp"
#include "indram/generate.hpp"
#include "indram/graph.hpp"
#include "indram/ramsey.hpp"

using namespace indram;
namespace fs = std::filesystem;

namespace {

const Graph K2 = complete_graph(2);
const Graph K3 = complete_graph(3);
const Graph P3 = path_graph(3);
const Graph M2 = copies(2, K2);

// A self-contained exactness audit: the claimed order arrows, every smaller
// swept order is fully witnessed, and each witness re-verifies.
void audit_exact(const IRResult& res) {
  REQUIRE(res.status == IrStatus::Exact);
  REQUIRE(res.arrow);
  CHECK(res.arrow->host.order() == res.value);
  CHECK(res.lo <= res.value);
  if (res.hi >= 0) CHECK(res.value <= res.hi);
  for (const auto& so : res.swept) {
    CHECK(so.order < res.value);
    GenFilter f;
    f.connected_only = so.connected_only;
    CHECK(so.witnesses.size() == count_graphs(so.order, f));
    for (const auto& w : so.witnesses) {
      CHECK(w.host.order() == so.order);
      CHECK_FALSE(verify_coloring(w.host, w.colouring, res.g, res.h));
    }
  }
  if (res.arrow->via == "sweep" && res.value > std::max(res.g.order(), 1)) {
    bool has_prev = false;
    for (const auto& so : res.swept)
      if (so.order == res.value - 1) has_prev = true;
    CHECK(has_prev);
  }
}

}  // namespace

TEST_CASE("closed-form lower bounds") {
  CHECK(ir_lower(K2, K2) == 2);
  CHECK(ir_lower(P3, K3) == 6);     // (alpha-1)*C(omega,2)+omega = 3+3
  CHECK(ir_lower(path_graph(5), M2) == 7);  // |V|+2 against a 2-matching
  CHECK(ir_lower(M2, K3) == 4);     // disconnected g: only the trivial bounds
}

TEST_CASE("small exact values carry complete certificates") {
  IrOptions opts;
  opts.order_cap = 7;
  IrSolver solver(opts);

  auto a = solver.ir_exact(K2, K2);
  CHECK(a.value == 2);
  audit_exact(a);

  auto b = solver.ir_exact(P3, P3);
  CHECK(b.value == 4);
  audit_exact(b);

  auto c = solver.ir_exact(P3, K2);
  CHECK(c.value == 3);
  audit_exact(c);

  auto d = solver.ir_exact(K3, K3);
  CHECK(d.value == 6);
  audit_exact(d);

  auto e = solver.ir_exact(M2, M2);
  CHECK(e.value == 6);
  audit_exact(e);
}

TEST_CASE("construction routes supply tight upper bounds") {
  IrSolver solver;
  auto c = solver.ir_upper_by_construction(path_graph(5), M2);
  REQUIRE(c);
  CHECK(c->order == 7);
  CHECK(is_isomorphic(c->host, cycle_graph(7)));
}

TEST_CASE("multicopy blue patterns agree with the direct computation") {
  IrOptions opts;
  opts.order_cap = 7;
  IrSolver solver(opts);
  auto via_reduction = solver.ir_exact_multicopy(P3, K2, 2);
  auto direct = solver.ir_exact(P3, M2);
  REQUIRE(via_reduction.status == IrStatus::Exact);
  REQUIRE(direct.status == IrStatus::Exact);
  CHECK(via_reduction.value == direct.value);
  CHECK(via_reduction.value == 6);
  REQUIRE(via_reduction.arrow);
  for (const auto& so : via_reduction.swept)
    for (const auto& w : so.witnesses)
      CHECK_FALSE(verify_coloring(w.host, w.colouring, P3, M2));
}

TEST_CASE("copy counts obey the decomposition inequality") {
  IrOptions opts;
  opts.order_cap = 8;
  IrSolver solver(opts);
  auto f1 = solver.ir_exact(path_graph(5), K2);
  auto f2 = solver.ir_exact_multicopy(path_graph(5), K2, 2);
  REQUIRE(f1.status == IrStatus::Exact);
  REQUIRE(f2.status == IrStatus::Exact);
  CHECK(f1.value == 5);
  CHECK(f2.value == 7);
  CHECK(f1.value <= f2.value);
  CHECK(f2.value <= 2 * f1.value);
}

TEST_CASE("an unreachable cap yields bounds, never a fabricated value") {
  IrOptions opts;
  opts.order_cap = 4;
  IrSolver solver(opts);
  auto res = solver.ir_exact(K3, K3);  // true value 6 exceeds the cap
  CHECK(res.status != IrStatus::Exact);
  CHECK(res.lo >= 5);
}

TEST_CASE("certificate bundles round-trip and tampering is caught") {
  IrOptions opts;
  opts.order_cap = 6;
  IrSolver solver(opts);
  IRResult res = solver.ir_exact(P3, P3);
  REQUIRE(res.status == IrStatus::Exact);

  fs::path dir = fs::temp_directory_path() / "indram-bundle-test";
  fs::remove_all(dir);
  write_bundle(dir.string(), res);

  CertifyReport ok = certify_bundle(dir.string());
  CHECK(ok.ok);
  CHECK(ok.witnesses_checked > 0);
  for (const auto& p : ok.problems) CAPTURE(p);
  CHECK(ok.problems.empty());

  // a bundle with a missing witness no longer covers the swept order
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".wtns") continue;
    fs::remove(entry.path());
    break;
  }
  CertifyReport bad = certify_bundle(dir.string());
  CHECK_FALSE(bad.ok);

  // an unreadable manifest is rejected, not half-trusted
  std::ofstream(dir / "result.json", std::ios::trunc) << "{ not json";
  CertifyReport worse = certify_bundle(dir.string());
  CHECK_FALSE(worse.ok);
  fs::remove_all(dir);
}
