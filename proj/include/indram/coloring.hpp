#ifndef INDRAM_COLORING_HPP
#define INDRAM_COLORING_HPP

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "indram/graph.hpp"
#include "indram/graph6.hpp"

namespace indram {

enum class Colour : std::uint8_t { Red, Blue };

inline const char* colour_name(Colour c) {
  return c == Colour::Red ? "red" : "blue";
}

// Up to 128 host edges, enough for every desk-scale host (K_16 has 120).
struct EdgeSet {
  std::uint64_t w0 = 0, w1 = 0;

  static constexpr int kMaxEdges = 128;

  void set(int i) { (i < 64 ? w0 : w1) |= std::uint64_t(1) << (i & 63); }
  bool test(int i) const {
    return ((i < 64 ? w0 : w1) >> (i & 63)) & 1u;
  }
  bool empty() const { return w0 == 0 && w1 == 0; }
  int count() const { return std::popcount(w0) + std::popcount(w1); }
  int first() const {
    return w0 ? std::countr_zero(w0) : 64 + std::countr_zero(w1);
  }
  bool subset_of(const EdgeSet& o) const {
    return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0;
  }
  EdgeSet operator&(const EdgeSet& o) const { return {w0 & o.w0, w1 & o.w1}; }
  EdgeSet operator|(const EdgeSet& o) const { return {w0 | o.w0, w1 | o.w1}; }
  EdgeSet andnot(const EdgeSet& o) const { return {w0 & ~o.w0, w1 & ~o.w1}; }
  bool intersects(const EdgeSet& o) const {
    return (w0 & o.w0) || (w1 & o.w1);
  }
  bool operator==(const EdgeSet&) const = default;
};

// Lex-ordered edge list of a host plus index lookup.
struct HostEdges {
  std::vector<std::pair<int, int>> list;
  std::vector<int> index;  // index[u * n + v] = edge id, -1 if non-edge
  int n = 0;

  explicit HostEdges(const Graph& g) : n(g.order()) {
    index.assign(static_cast<std::size_t>(n) * n, -1);
    list = g.edges();
    if (static_cast<int>(list.size()) > EdgeSet::kMaxEdges)
      throw std::invalid_argument("host has more than 128 edges");
    for (int e = 0; e < static_cast<int>(list.size()); ++e) {
      auto [u, v] = list[e];
      index[static_cast<std::size_t>(u) * n + v] = e;
      index[static_cast<std::size_t>(v) * n + u] = e;
    }
  }

  int id(int u, int v) const {
    return index[static_cast<std::size_t>(u) * n + v];
  }
  int count() const { return static_cast<int>(list.size()); }
};

// Total assignment of colours to host edges, aligned with HostEdges order.
struct EdgeColoring {
  std::vector<Colour> colour;

  static EdgeColoring uniform(int edge_count, Colour c) {
    EdgeColoring k;
    k.colour.assign(edge_count, c);
    return k;
  }

  static EdgeColoring from_red_mask(int edge_count, const EdgeSet& red) {
    EdgeColoring k;
    k.colour.resize(edge_count);
    for (int e = 0; e < edge_count; ++e)
      k.colour[e] = red.test(e) ? Colour::Red : Colour::Blue;
    return k;
  }
};

// Witness file format: header "c <graph6>", then "e u v red|blue" per edge
// in lexicographic (u,v) order. Bit-exact for certificate files.
inline void write_witness(std::ostream& os, const Graph& host,
                          const EdgeColoring& c) {
  HostEdges he(host);
  if (c.colour.size() != he.list.size())
    throw std::invalid_argument("colouring is not total on host edges");
  os << "c " << graph6_encode(host) << "\n";
  for (std::size_t e = 0; e < he.list.size(); ++e)
    os << "e " << he.list[e].first << " " << he.list[e].second << " "
       << colour_name(c.colour[e]) << "\n";
}

inline std::string witness_to_string(const Graph& host, const EdgeColoring& c) {
  std::ostringstream os;
  write_witness(os, host, c);
  return os.str();
}

struct WitnessFile {
  Graph host;
  EdgeColoring colouring;
};

inline WitnessFile read_witness(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("c ", 0) != 0)
    throw std::runtime_error("witness: missing 'c <graph6>' header");
  WitnessFile w;
  w.host = graph6_decode(line.substr(2));
  HostEdges he(w.host);
  w.colouring.colour.resize(he.count());
  for (int e = 0; e < he.count(); ++e) {
    if (!std::getline(is, line))
      throw std::runtime_error("witness: truncated edge list");
    std::istringstream ls(line);
    std::string tag, col;
    int u, v;
    if (!(ls >> tag >> u >> v >> col) || tag != "e")
      throw std::runtime_error("witness: bad edge line: " + line);
    if (u != he.list[e].first || v != he.list[e].second)
      throw std::runtime_error("witness: edges out of order: " + line);
    if (col == "red")
      w.colouring.colour[e] = Colour::Red;
    else if (col == "blue")
      w.colouring.colour[e] = Colour::Blue;
    else
      throw std::runtime_error("witness: bad colour: " + line);
  }
  return w;
}

}  // namespace indram

#endif  // INDRAM_COLORING_HPP
