#ifndef INDRAM_CERTIFICATE_HPP
#define INDRAM_CERTIFICATE_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "indram/arrow.hpp"
#include "indram/canonical.hpp"
#include "indram/coloring.hpp"
#include "indram/generate.hpp"
#include "indram/ramsey.hpp"

namespace indram {

// Bundle layout: <dir>/result.json plus one witness file per non-arrowing
// host, named by the host's canonical graph6 with a .wtns suffix.
inline void write_bundle(const std::filesystem::path& dir,
                         const IRResult& res) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json j;
  j["red"] = graph6_encode(canonical_form(res.g));
  j["blue"] = graph6_encode(canonical_form(res.h));
  j["status"] = res.status == IrStatus::Exact
                    ? "exact"
                    : (res.status == IrStatus::Bounds ? "bounds" : "unknown");
  if (res.status == IrStatus::Exact) j["value"] = res.value;
  j["lo"] = res.lo;
  if (res.hi >= 0) j["hi"] = res.hi;
  if (res.arrow) {
    j["arrow"] = {{"host", graph6_encode(res.arrow->host)},
                  {"via", res.arrow->via},
                  {"nodes", res.arrow->nodes}};
  }
  j["total_nodes"] = res.total_nodes;
  nlohmann::json orders = nlohmann::json::array();
  for (const SweptOrder& so : res.swept) {
    orders.push_back({{"order", so.order},
                      {"connected_only", so.connected_only},
                      {"count", so.witnesses.size()}});
    for (const WitnessRecord& w : so.witnesses) {
      std::string name = graph6_encode(canonical_form(w.host)) + ".wtns";
      std::ofstream os(dir / name, std::ios::binary);
      write_witness(os, w.host, w.colouring);
    }
  }
  j["witness_orders"] = orders;
  std::ofstream os(dir / "result.json", std::ios::binary);
  os << j.dump(2) << "\n";
}

struct CertifyReport {
  bool ok = false;
  std::size_t witnesses_checked = 0;
  std::vector<std::string> problems;
};

// Re-validates an existing bundle: every witness file parses, is a good
// colouring for the pair, and is named by its host's canonical graph6;
// per-order manifest counts match isomorph-free enumeration.
inline CertifyReport certify_bundle(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  CertifyReport rep;
  fs::path meta = dir / "result.json";
  if (!fs::exists(meta)) {
    rep.problems.push_back("missing result.json");
    return rep;
  }
  nlohmann::json j;
  try {
    std::ifstream is(meta);
    is >> j;
  } catch (const std::exception& e) {
    rep.problems.push_back(std::string("bad result.json: ") + e.what());
    return rep;
  }
  Graph g, h;
  try {
    g = graph6_decode(j.at("red").get<std::string>());
    h = graph6_decode(j.at("blue").get<std::string>());
  } catch (const std::exception& e) {
    rep.problems.push_back(std::string("bad pair in result.json: ") + e.what());
    return rep;
  }

  std::map<int, std::size_t> found_per_order;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".wtns") continue;
    std::string name = entry.path().stem().string();
    WitnessFile w;
    try {
      std::ifstream is(entry.path(), std::ios::binary);
      w = read_witness(is);
    } catch (const std::exception& e) {
      rep.problems.push_back(name + ": unreadable witness: " + e.what());
      continue;
    }
    if (graph6_encode(canonical_form(w.host)) != name)
      rep.problems.push_back(name + ": file name is not the host's canonical graph6");
    if (auto bad = verify_coloring(w.host, w.colouring, g, h))
      rep.problems.push_back(name + ": witness colouring has a " +
                             std::string(colour_name(bad->colour)) +
                             " monochromatic copy");
    ++rep.witnesses_checked;
    ++found_per_order[w.host.order()];
  }

  for (const auto& entry : j.value("witness_orders", nlohmann::json::array())) {
    int order = entry.at("order").get<int>();
    bool conn = entry.value("connected_only", false);
    std::size_t claimed = entry.at("count").get<std::size_t>();
    GenFilter f;
    f.connected_only = conn;
    std::size_t expect = count_graphs(order, f);
    if (claimed != expect)
      rep.problems.push_back("order " + std::to_string(order) +
                             ": manifest count " + std::to_string(claimed) +
                             " != enumeration count " + std::to_string(expect));
    if (found_per_order[order] != claimed)
      rep.problems.push_back("order " + std::to_string(order) + ": " +
                             std::to_string(found_per_order[order]) +
                             " witness files but manifest says " +
                             std::to_string(claimed));
  }
  rep.ok = rep.problems.empty();
  return rep;
}

}  // namespace indram

#endif  // INDRAM_CERTIFICATE_HPP
