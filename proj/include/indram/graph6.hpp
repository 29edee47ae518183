#ifndef INDRAM_GRAPH6_HPP
#define INDRAM_GRAPH6_HPP

#include <stdexcept>
#include <string>

#include "indram/graph.hpp"

namespace indram {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Standard graph6: size byte 63+n, then the upper-triangle bits
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian 6 per byte,
// each byte offset by 63, zero-padded. One-byte size form only (n <= 62).
inline std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph graph6_decode(const std::string& s) {
  if (s.empty()) throw Graph6Error("graph6: empty input");
  for (char ch : s) {
    int b = static_cast<unsigned char>(ch);
    if (b < 63 || b > 126)
      throw Graph6Error("graph6: byte out of range at '" + s + "'");
  }
  int n = static_cast<unsigned char>(s[0]) - 63;
  if (n > Graph::kMaxOrder)
    throw Graph6Error("graph6: order > 62 unsupported");
  Graph g(n);
  long need = static_cast<long>(n) * (n - 1) / 2;
  long have = static_cast<long>(s.size() - 1) * 6;
  if (have < need) throw Graph6Error("graph6: truncated bit stream");
  long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = static_cast<unsigned char>(s[1 + bit / 6]) - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace indram

#endif  // INDRAM_GRAPH6_HPP
