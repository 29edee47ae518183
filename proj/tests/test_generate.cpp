#include <doctest.h>

#include <set>
#include <vector>

#include "indram/canonical.hpp"
#include "indram/generate.hpp"
#include "indram/graph.hpp"
#include "indram/graph6.hpp"

using namespace indram;

namespace {

// Independent census: canonical keys of all labelled graphs on n vertices.
std::set<CanonicalKey> labelled_dedup(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::set<CanonicalKey> keys;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots.size());
       ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
    keys.insert(canonical_key(g));
  }
  return keys;
}

}  // namespace

TEST_CASE("isomorphism class counts match the literature sequence") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(count_graphs(n) == expected[n - 1]);
}

TEST_CASE("enumeration equals the labelled-dedup oracle up to order 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<CanonicalKey> got;
    for (const Graph& g : all_graphs(n)) {
      CHECK(g.order() == n);
      CHECK(got.insert(canonical_key(g)).second);  // no duplicates
    }
    CHECK(got == labelled_dedup(n));
  }
}

TEST_CASE("graph6 round-trips across the full order-7 census") {
  for (const Graph& g : all_graphs(7))
    CHECK(graph6_decode(graph6_encode(g)) == g);
}

TEST_CASE("filters are sound and complete") {
  GenFilter connected;
  connected.connected_only = true;
  // connected counts: 1, 1, 2, 6, 21, 112, 853
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n)
    CHECK(count_graphs(n, connected) == expected[n - 1]);
  for (const Graph& g : all_graphs(5, connected)) CHECK(is_connected(g));

  GenFilter edges;
  edges.min_edges = 3;
  edges.max_edges = 5;
  std::size_t total = 0;
  for (const Graph& g : all_graphs(5, edges)) {
    CHECK(g.edge_count() >= 3);
    CHECK(g.edge_count() <= 5);
    ++total;
  }
  // complement: classes outside the window
  std::size_t outside = 0;
  for (const Graph& g : all_graphs(5))
    if (g.edge_count() < 3 || g.edge_count() > 5) ++outside;
  CHECK(total + outside == 34);

  GenFilter contains;
  contains.must_contain_induced.push_back(complete_graph(3));
  for (const Graph& g : all_graphs(5, contains))
    CHECK(find_induced(g, complete_graph(3)));
}

TEST_CASE("generation streams deterministically and stops on demand") {
  std::vector<std::string> first, second;
  generate(5, {}, [&](const Graph& g) {
    first.push_back(graph6_encode(g));
    return true;
  });
  generate(5, {}, [&](const Graph& g) {
    second.push_back(graph6_encode(g));
    return true;
  });
  CHECK(first == second);
  std::size_t seen = 0;
  bool completed = generate(5, {}, [&](const Graph&) { return ++seen < 10; });
  CHECK_FALSE(completed);
  CHECK(seen == 10);
}

TEST_CASE("order bounds are enforced") {
  CHECK_THROWS_AS(count_graphs(0), std::invalid_argument);
  CHECK_THROWS_AS(count_graphs(11), std::invalid_argument);
}
