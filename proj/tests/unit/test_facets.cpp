#include <doctest.h>

#include "edgepoly/facets.hpp"
#include "fixtures.hpp"

using namespace edgepoly;

namespace {
Subset S(std::initializer_list<int> m) { return subset_from_members(std::vector<int>(m)); }
}  // namespace

TEST_CASE("subset helpers") {
  CHECK(subset_members(S({1, 3})) == std::vector<int>{1, 3});
  CHECK(subset_less(S({3}), S({1, 2})));
  CHECK(subset_less(S({1, 2}), S({1, 3})));
  CHECK_FALSE(subset_less(S({1, 3}), S({1, 3})));
}

TEST_CASE("rank, closure and inseparability on P_3") {
  const RankOracle r(enumerate_bases(family::path(3), BoundVector{2, 3, 2}));
  CHECK(r(S({1, 3})) == 3);
  CHECK(r(S({1, 2, 3})) == 6);
  CHECK(r(S({1, 2})) == 5);
  CHECK(is_closed(r, S({1, 3})));
  CHECK(is_closed(r, S({1, 2, 3})));
  CHECK_FALSE(is_inseparable(r, S({1, 2})));
  CHECK(is_inseparable(r, S({1, 3})));
  CHECK(is_inseparable(r, S({2})));
}

TEST_CASE("facet systems from graphs") {
  CHECK(fixtures::path3_polytope() ==
        HPolytope(3, {{S({1}), 2}, {S({2}), 3}, {S({3}), 2}, {S({1, 3}), 3}}));

  const auto k34 = fixtures::k34_polytope();
  std::vector<Facet> expected;
  for (int i = 1; i <= 7; ++i) expected.push_back({S({i}), 2});
  expected.push_back({S({4, 5, 6, 7}), 6});
  CHECK(k34 == HPolytope(7, expected));
  const RankOracle r(enumerate_bases(family::complete_bipartite(3, 4), BoundVector(7, 2)));
  CHECK(is_closed(r, S({4})));

  CHECK(fixtures::polytope_of(family::complete_bipartite(2, 2), BoundVector(4, 2)) ==
        fixtures::box(4, 2));
  CHECK(fixtures::polytope_of(family::cycle(3), BoundVector{1, 1, 1}).upper().back() ==
        Facet{S({1, 2, 3}), 2});
}

TEST_CASE("Veronese polytopes and prisms") {
  CHECK(fixtures::q6_5333().upper().size() == 5);
  CHECK(veronese_polytope({4, {2, 2, 2}}) ==
        HPolytope(3, {{S({1}), 2}, {S({2}), 2}, {S({3}), 2}, {S({1, 2, 3}), 4}}));
  CHECK_THROWS_AS(veronese_polytope({6, {2, 2, 2}}), Error);

  CHECK(star_prism({3, {2, 2}}) ==
        HPolytope(3, {{S({1}), 3}, {S({2}), 2}, {S({3}), 2}, {S({2, 3}), 3}}));
  CHECK(star_prism({6, {5, 3, 3, 3}}).upper().size() == 6);
  CHECK(star_prism({6, {5, 3, 3, 3}}) == veronese_prism({6, {5, 3, 3, 3}}));
}

TEST_CASE("HPolytope validation") {
  CHECK_THROWS_AS(HPolytope(2, {{S({1}), 1}}), Error);
  CHECK_THROWS_AS(HPolytope(1, {{S({1}), 0}}), Error);
  CHECK(fixtures::box(2, 3).coordinate_bound(1) == 3);
}
