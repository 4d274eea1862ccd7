#include <doctest.h>

#include "edgepoly/graph.hpp"

using namespace edgepoly;

TEST_CASE("family constructors") {
  CHECK(family::path(3).edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(family::cycle(3).edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  const auto k34 = family::complete_bipartite(3, 4);
  CHECK(k34.size() == 12);
  for (const auto& e : k34.edges()) {
    CHECK(e.u <= 3);
    CHECK(e.v >= 4);
  }
  CHECK(family::star(3).degree(1) == 3);
  CHECK(family::complete(5).size() == 10);
  const int params[] = {3, 4};
  CHECK(family::make("complete-bipartite", params) == k34);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(1, {}), Error);
  CHECK_THROWS_AS(Graph(3, {{1, 1}, {2, 3}}), Error);
  CHECK_THROWS_AS(Graph(3, {{1, 2}}), Error);
  CHECK_THROWS_AS(Graph(2, {{1, 3}}), Error);
  const Graph g(3, {{2, 1}, {1, 2}, {3, 2}});
  CHECK(g.size() == 2);
  CHECK(g.edges().front() == Edge{1, 2});
}

TEST_CASE("connectivity, trees, bipartition") {
  CHECK(family::path(5).is_tree());
  CHECK_FALSE(family::cycle(4).is_tree());
  CHECK_FALSE(Graph(4, {{1, 2}, {3, 4}}).is_connected());
  CHECK(family::cycle(4).bipartition().size() == 4);
  CHECK(family::cycle(5).bipartition().empty());
}

TEST_CASE("leaves at distance two") {
  CHECK(leaf_distance_two_exists(family::path(3)));
  CHECK_FALSE(leaf_distance_two_exists(family::path(4)));
  CHECK(leaf_distance_two_exists(family::star(3)));
  CHECK_FALSE(leaf_distance_two_exists(family::path(2)));
  CHECK_THROWS_AS(leaf_distance_two_exists(family::cycle(4)), Error);
}

TEST_CASE("tree catalogue sizes") {
  // OEIS A000055
  const std::size_t expected[] = {1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 2; n <= 10; ++n) CHECK(trees_up_to_isomorphism(n).size() == expected[n]);
  for (const auto& t : trees_up_to_isomorphism(7)) CHECK(t.is_tree());
}
