#include <doctest.h>

#include "edgepoly/lattice.hpp"
#include "edgepoly/oracle.hpp"
#include "fixtures.hpp"

using namespace edgepoly;

TEST_CASE("brute bases") {
  auto tri = oracle::brute_bases(family::cycle(3), {1, 1, 1});
  CHECK(tri.delta == 1);
  CHECK(tri.bases.size() == 3);
  auto p3 = oracle::brute_bases(family::path(3), {2, 3, 2});
  CHECK(p3.delta == 3);
  CHECK(p3.bases.size() == 2);
  auto k2 = oracle::brute_bases(family::path(2), {1, 1});
  CHECK(k2.bases == std::set<Point>{{1, 1}});
  CHECK_THROWS_AS(oracle::brute_bases(family::complete(8), BoundVector(8, 9)), Error);
}

TEST_CASE("brute volume") {
  auto cube = oracle::brute_volume(fixtures::box(4, 2));
  CHECK(cube.numerator == 384);
  CHECK(cube.denominator == 1);
  CHECK(oracle::brute_volume(fixtures::box(1, 2)).numerator == 2);
  const auto p = fixtures::path3_polytope();
  const auto d = delta_vector(p);
  std::int64_t sum = 0;
  for (auto v : d.delta) sum += v;
  CHECK(oracle::brute_volume(p).numerator == sum);
  CHECK_THROWS_AS(oracle::brute_volume(fixtures::box(5, 1)), Error);
}

TEST_CASE("brute level*") {
  CHECK(oracle::brute_level_star(fixtures::path3_polytope(), 3));
  CHECK_FALSE(oracle::brute_level_star(fixtures::k34_polytope(), 2));
  CHECK(oracle::brute_level_star(veronese_polytope({4, {2, 2, 2}}), 3));
}
