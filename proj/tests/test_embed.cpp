#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <vector>

#include "indram/embed.hpp"
#include "indram/generate.hpp"
#include "indram/graph.hpp"

using namespace indram;

namespace {

bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.relabelled(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Independent oracle: count vertex subsets that induce the pattern.
std::size_t subset_count_induced(const Graph& host, const Graph& pattern) {
  int n = host.order(), k = pattern.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    if (brute_force_isomorphic(host.induced(mask), pattern)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("find_induced respects induced (non-)edges") {
  // C_5 contains induced P_4 but no triangle and no induced 2K_2 (every two
  // disjoint edges of C_5 are joined); C_6 does contain an induced 2K_2.
  CHECK(find_induced(cycle_graph(5), path_graph(4)));
  CHECK_FALSE(find_induced(cycle_graph(5), copies(2, complete_graph(2))));
  CHECK(find_induced(cycle_graph(6), copies(2, complete_graph(2))));
  CHECK_FALSE(find_induced(cycle_graph(5), complete_graph(3)));
  // K_4 has a P_4 subgraph but no induced P_4.
  CHECK_FALSE(find_induced(complete_graph(4), path_graph(4)));
  CHECK(find_weak(complete_graph(4), path_graph(4)));
  // K_8 has no induced 2K_3 (cross edges always present).
  CHECK_FALSE(find_induced(complete_graph(8), copies(2, complete_graph(3))));
  CHECK(find_weak(complete_graph(8), copies(2, complete_graph(3))));
}

TEST_CASE("embeddings returned are valid") {
  Graph host = disjoint_union(cycle_graph(6), star_graph(3));
  for (const Graph& p :
       {path_graph(3), copies(2, complete_graph(2)), star_graph(3)}) {
    auto e = find_induced(host, p);
    REQUIRE(e);
    CHECK(is_valid_induced(host, p, *e));
  }
  auto w = find_weak(host, path_graph(4));
  REQUIRE(w);
  CHECK(is_valid_weak(host, path_graph(4), *w));
}

TEST_CASE("copy counting matches the subset oracle on all small hosts") {
  std::vector<Graph> patterns = {
      complete_graph(2),        path_graph(3),
      complete_graph(3),        copies(2, complete_graph(2)),
      path_graph(4),            star_graph(3),
      copies(2, path_graph(2))};
  for (int n = 1; n <= 5; ++n)
    for (const Graph& host : all_graphs(n))
      for (const Graph& p : patterns) {
        CAPTURE(n);
        CHECK(count_induced(host, p, /*dedup=*/true) ==
              subset_count_induced(host, p));
      }
}

TEST_CASE("copy counting matches the subset oracle on order-6 spot hosts") {
  std::vector<Graph> hosts = {cycle_graph(6), complete_graph(6),
                              disjoint_union(complete_graph(3), path_graph(3)),
                              complete_multipartite({3, 3}), star_graph(5)};
  std::vector<Graph> patterns = {path_graph(3), complete_graph(3),
                                 copies(2, complete_graph(2)), path_graph(4),
                                 copies(2, path_graph(3))};
  for (const Graph& host : hosts)
    for (const Graph& p : patterns)
      CHECK(count_induced(host, p, true) == subset_count_induced(host, p));
}

TEST_CASE("known copy counts") {
  CHECK(count_induced(complete_graph(4), complete_graph(3), true) == 4);
  CHECK(count_induced(complete_graph(3), path_graph(3), true) == 0);
  CHECK(count_induced(star_graph(3), path_graph(3), true) == 3);
  CHECK(count_induced(cycle_graph(6), copies(2, complete_graph(2)), true) == 3);
}

TEST_CASE("mono-colour search agrees with searching the colour subgraph") {
  Graph host = cycle_graph(7);
  HostEdges he(host);
  // alternate colours around the cycle
  EdgeColoring c = EdgeColoring::uniform(he.count(), Colour::Red);
  for (int e = 0; e < he.count(); e += 2) c.colour[e] = Colour::Blue;
  // build the red subgraph explicitly
  Graph red(host.order());
  for (int e = 0; e < he.count(); ++e)
    if (c.colour[e] == Colour::Red)
      red.add_edge(he.list[e].first, he.list[e].second);
  for (const Graph& p : {path_graph(3), path_graph(4), complete_graph(3)}) {
    bool direct = find_mono_induced(host, c, Colour::Red, p).has_value();
    // oracle: induced copy of p in host whose edges are all red
    bool oracle = false;
    enumerate_induced(host, p, true, [&](const Embedding& emb) {
      bool all_red = true;
      for (int u = 0; u < p.order() && all_red; ++u)
        for (int v = u + 1; v < p.order() && all_red; ++v)
          if (p.adjacent(u, v) &&
              c.colour[he.id(emb.map[u], emb.map[v])] != Colour::Red)
            all_red = false;
      if (all_red) {
        oracle = true;
        return false;
      }
      return true;
    });
    CHECK(direct == oracle);
    (void)red;
  }
}

TEST_CASE("copy masks cover exactly the edges of each copy") {
  Graph host = complete_graph(5);
  HostEdges he(host);
  auto masks = induced_copy_masks(host, he, complete_graph(3));
  CHECK(masks.size() == 10);  // C(5,3) triangles
  for (const EdgeSet& m : masks) CHECK(m.count() == 3);
  auto weak = weak_copy_masks(host, he, path_graph(3));
  // a weak P_3 copy is an edge pair sharing a vertex: 5 * C(4,2) = 30
  CHECK(weak.size() == 30);
  for (const EdgeSet& m : weak) CHECK(m.count() == 2);
}
