#ifndef INDRAM_FAMILY_EXPR_HPP
#define INDRAM_FAMILY_EXPR_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "indram/graph.hpp"
#include "indram/graph6.hpp"

namespace indram {

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grammar:  expr := term ('+' term)* ;  term := [multiplier] family ;
// family := ('P'|'C'|'K'|'S') int (',' int)*
// Examples: P5, C7, K4, S3, K3,3,2, 2K2, 3P3, K3+2K2.
// A graph6 literal is written with an explicit "g6:" prefix.
struct FamilyTerm {
  int mult = 1;
  char kind = 0;
  std::vector<int> params;
};

struct GraphExpr {
  std::vector<FamilyTerm> terms;  // empty when literal
  std::string g6_literal;
  bool is_literal = false;
};

namespace detail {

inline FamilyTerm parse_term(const std::string& s) {
  std::size_t i = 0;
  FamilyTerm t;
  if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    t.mult = std::stoi(s.substr(i, j - i));
    i = j;
  }
  if (i >= s.size()) throw ExprError("expected family letter in '" + s + "'");
  t.kind = s[i];
  if (t.kind != 'P' && t.kind != 'C' && t.kind != 'K' && t.kind != 'S')
    throw ExprError("unknown family '" + std::string(1, t.kind) + "'");
  ++i;
  while (true) {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ExprError("expected integer in '" + s + "'");
    t.params.push_back(std::stoi(s.substr(i, j - i)));
    i = j;
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (i != s.size()) throw ExprError("trailing characters in '" + s + "'");
  if (t.params.size() > 1 && t.kind != 'K')
    throw ExprError("only K takes part sizes: '" + s + "'");
  if (t.mult < 1) throw ExprError("multiplier must be >= 1 in '" + s + "'");
  return t;
}

}  // namespace detail

inline GraphExpr parse_expr(const std::string& text) {
  GraphExpr e;
  if (text.rfind("g6:", 0) == 0) {
    e.is_literal = true;
    e.g6_literal = text.substr(3);
    graph6_decode(e.g6_literal);  // validate now
    return e;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t plus = text.find('+', start);
    std::string piece = text.substr(
        start, plus == std::string::npos ? std::string::npos : plus - start);
    if (piece.empty()) throw ExprError("empty term in '" + text + "'");
    e.terms.push_back(detail::parse_term(piece));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return e;
}

inline Graph build_term(const FamilyTerm& t) {
  Graph base;
  switch (t.kind) {
    case 'P':
      base = path_graph(t.params[0]);
      break;
    case 'C':
      base = cycle_graph(t.params[0]);
      break;
    case 'S':
      base = star_graph(t.params[0]);
      break;
    case 'K':
      base = t.params.size() == 1 ? complete_graph(t.params[0])
                                  : complete_multipartite(t.params);
      break;
    default:
      throw ExprError("bad term kind");
  }
  return copies(t.mult, base);
}

inline Graph build_expr(const GraphExpr& e) {
  if (e.is_literal) return graph6_decode(e.g6_literal);
  Graph g = build_term(e.terms[0]);
  for (std::size_t i = 1; i < e.terms.size(); ++i)
    g = disjoint_union(g, build_term(e.terms[i]));
  return g;
}

inline Graph parse_graph(const std::string& text) {
  return build_expr(parse_expr(text));
}

inline std::string print_expr(const GraphExpr& e) {
  if (e.is_literal) return "g6:" + e.g6_literal;
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (i) out += '+';
    const FamilyTerm& t = e.terms[i];
    if (t.mult != 1) out += std::to_string(t.mult);
    out += t.kind;
    for (std::size_t j = 0; j < t.params.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(t.params[j]);
    }
  }
  return out;
}

}  // namespace indram

#endif  // INDRAM_FAMILY_EXPR_HPP
