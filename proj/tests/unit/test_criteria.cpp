#include <doctest.h>

#include "edgepoly/criteria.hpp"
#include "fixtures.hpp"

using namespace edgepoly;

TEST_CASE("bipartite interior") {
  CHECK(bipartite_interior_nonempty(make_bipartite_spec(4, 3, BoundVector(7, 2))));
  CHECK_FALSE(bipartite_interior_nonempty(make_bipartite_spec(4, 1, {2, 2, 2, 2, 4})));
  CHECK(bipartite_interior_nonempty(make_bipartite_spec(2, 1, {2, 2, 3})));
  CHECK_THROWS_AS(make_bipartite_spec(2, 2, {1, 1, 2, 2}), Error);
  CHECK_FALSE(normalize_bipartite(2, 2, {1, 2, 2, 1}).has_value());
  const auto swapped = normalize_bipartite(3, 4, BoundVector(7, 2));
  REQUIRE(swapped);
  CHECK(swapped->m == 4);
}

TEST_CASE("bipartite level criterion") {
  CHECK(bipartite_level_criterion(make_bipartite_spec(2, 1, {2, 2, 3})).level);
  const auto k34 = bipartite_level_criterion(make_bipartite_spec(4, 3, BoundVector(7, 2)));
  CHECK_FALSE(k34.level);
  REQUIRE(k34.violation);
  CHECK(k34.violation->condition == 1);
  CHECK(k34.violation->subset == std::vector<int>{1, 2, 3, 4});
  CHECK(bipartite_level_criterion(make_bipartite_spec(3, 1, {2, 2, 2, 4})).level);
}

TEST_CASE("Veronese criterion") {
  const auto q = veronese_level_criterion({6, {5, 3, 3, 3}});
  CHECK_FALSE(q.level);
  REQUIRE(q.violation);
  CHECK(q.violation->subset == std::vector<int>{2, 3, 4});
  CHECK(veronese_level_criterion({4, {2, 2, 2}}).level);
  for (Coord a = 6; a <= 11; ++a) CHECK_FALSE(veronese_level_criterion({a, {3, 3, 2, 2, 2}}).level);
}

TEST_CASE("uniform formula") {
  for (int n = 2; n <= 10; n += 2) CHECK(veronese_uniform_formula(n, 4, n / 2 * 4 + 1));
  for (int n = 3; n <= 9; n += 2) CHECK(veronese_uniform_formula(n, 4, (n + 1) / 2 * 4));
  for (int n = 3; n <= 8; ++n)
    for (Coord a = n + 1; a < 2 * n; ++a) CHECK(veronese_uniform_formula(n, 2, a) == (a == n + 1));
}

TEST_CASE("labelling classifications") {
  for (int n = 2; n <= 10; ++n)
    CHECK(tree_labeling_pseudo_gorenstein(family::path(n)) == (n != 3));
  CHECK_FALSE(tree_labeling_pseudo_gorenstein(family::star(3)));
  const int spider[] = {1, 2, 1, 4, 1, 6};
  CHECK(tree_labeling_pseudo_gorenstein(family::tree_from_parents(spider)));
  CHECK(bipartite_labeling_classification(4, 3));
  CHECK(bipartite_labeling_classification(2, 2));
  CHECK_FALSE(bipartite_labeling_classification(4, 2));
}

TEST_CASE("dilation containment") {
  const auto tri = dilation_containment(family::cycle(3), {1, 1, 1}, 2);
  CHECK(tri.holds);
  CHECK(tri.strict);
  const auto same = dilation_containment(family::path(3), {2, 3, 2}, 1);
  CHECK(same.holds);
  CHECK_FALSE(same.strict);
  CHECK(fixtures::polytope_of(family::cycle(3), {2, 2, 2}) == fixtures::box(3, 2));
  CHECK(dilation_containment(family::path(3), {2, 3, 2}, 2).holds);
}

TEST_CASE("labelling search") {
  CHECK_FALSE(search_labeling(family::path(3), 3).has_value());
  CHECK(search_labeling(family::path(4), 2) == BoundVector(4, 2));
  CHECK(search_labeling(family::complete_bipartite(3, 4), 2) == BoundVector(7, 2));
  const int spider[] = {1, 2, 1, 4, 1, 6};
  CHECK(search_labeling(family::tree_from_parents(spider), 2) == BoundVector(7, 2));
}
