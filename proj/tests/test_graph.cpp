#include <doctest.h>

#include "indram/family_expr.hpp"
#include "indram/graph.hpp"
#include "indram/graph6.hpp"

using namespace indram;

TEST_CASE("graph basics") {
  Graph g(4);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(63), std::invalid_argument);
}

TEST_CASE("complement and induced subgraph") {
  Graph p4 = path_graph(4);
  Graph c = p4.complement();
  CHECK(c.edge_count() == 6 - 3);
  CHECK(c.adjacent(0, 3));
  CHECK_FALSE(c.adjacent(0, 1));
  // vertices {0,1,3} of P_4 induce an edge plus an isolated vertex
  Graph sub = p4.induced(0b1011);
  CHECK(sub.order() == 3);
  CHECK(sub.edge_count() == 1);
  CHECK(sub.adjacent(0, 1));
}

TEST_CASE("relabelling permutes adjacency") {
  Graph p3 = path_graph(3);
  Graph r = p3.relabelled({2, 0, 1});  // centre becomes 0
  CHECK(r.adjacent(0, 1));
  CHECK(r.adjacent(0, 2));
  CHECK_FALSE(r.adjacent(1, 2));
}

TEST_CASE("standard families") {
  CHECK(path_graph(1).edge_count() == 0);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(star_graph(3).order() == 4);
  CHECK(star_graph(3).edge_count() == 3);
  CHECK(complete_multipartite({2, 1}).edge_count() == 2);  // this is P_3
  CHECK(empty_graph(4).edge_count() == 0);
  CHECK(copies(3, complete_graph(2)).order() == 6);
  CHECK(copies(3, complete_graph(2)).edge_count() == 3);
}

TEST_CASE("independence and clique numbers") {
  CHECK(independence_number(complete_graph(5)) == 1);
  CHECK(independence_number(empty_graph(5)) == 5);
  CHECK(independence_number(cycle_graph(5)) == 2);
  CHECK(independence_number(path_graph(5)) == 3);
  CHECK(clique_number(complete_graph(4)) == 4);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(copies(2, complete_graph(3))) == 3);
}

TEST_CASE("components and connectivity") {
  Graph g = disjoint_union(path_graph(2), path_graph(3));
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == 0b00011);
  CHECK(comps[1] == 0b11100);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(cycle_graph(4)));
  CHECK(is_connected(Graph(1)));
  CHECK(has_isolated_vertex(disjoint_union(Graph(1), complete_graph(2))));
  CHECK_FALSE(has_isolated_vertex(path_graph(4)));
  auto p = parameters(cycle_graph(6));
  CHECK(p.independence_number == 3);
  CHECK(p.clique_number == 2);
  CHECK(p.connected);
}

TEST_CASE("graph6 fixed encodings") {
  CHECK(graph6_encode(complete_graph(2)) == "A_");
  CHECK(graph6_encode(path_graph(3)) == "Bg");
  CHECK(graph6_encode(complete_graph(3)) == "Bw");
  CHECK(graph6_decode("A_") == complete_graph(2));
  CHECK(graph6_decode("Bg") == path_graph(3));
  CHECK(graph6_decode("Bw") == complete_graph(3));
}

TEST_CASE("graph6 round-trip and error handling") {
  for (const Graph& g :
       {path_graph(5), cycle_graph(7), complete_graph(6), star_graph(4),
        copies(3, path_graph(3)), empty_graph(1), Graph(0)})
    CHECK(graph6_decode(graph6_encode(g)) == g);
  CHECK_THROWS_AS(graph6_decode("B"), Graph6Error);     // truncated
  CHECK_THROWS_AS(graph6_decode("B\x01"), Graph6Error);  // byte out of range
  CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
}

TEST_CASE("family expressions build the advertised graphs") {
  CHECK(parse_graph("P5") == path_graph(5));
  CHECK(parse_graph("C7") == cycle_graph(7));
  CHECK(parse_graph("K4") == complete_graph(4));
  CHECK(parse_graph("S3") == star_graph(3));
  CHECK(parse_graph("2K2") == copies(2, complete_graph(2)));
  CHECK(parse_graph("K2,1") == complete_multipartite({2, 1}));
  CHECK(parse_graph("K3+2K2") ==
        disjoint_union(complete_graph(3), copies(2, complete_graph(2))));
  CHECK(parse_graph("g6:Bw") == complete_graph(3));
  CHECK_THROWS_AS(parse_graph("Q5"), ExprError);
  CHECK_THROWS_AS(parse_graph("P"), ExprError);
  CHECK_THROWS_AS(parse_graph("P5+"), ExprError);
  CHECK_THROWS_AS(parse_graph("0K3"), ExprError);
}

TEST_CASE("expression print/parse round-trip") {
  for (const char* s : {"P5", "2K2", "K3,3,2", "3P3+C7", "g6:Bw", "K3+2K2"}) {
    GraphExpr e = parse_expr(s);
    std::string printed = print_expr(e);
    CHECK(printed == s);
    CHECK(build_expr(parse_expr(printed)) == build_expr(e));
  }
}
