#include <doctest.h>

#include "edgepoly/levelness.hpp"
#include "fixtures.hpp"

using namespace edgepoly;

TEST_CASE("pseudo-Gorenstein*") {
  CHECK(pseudo_gorenstein_star(fixtures::k34_polytope()));
  CHECK_FALSE(pseudo_gorenstein_star(fixtures::q6_5333()));
  CHECK_FALSE(pseudo_gorenstein_star(fixtures::polytope_of(family::cycle(3), {1, 1, 1})));
}

TEST_CASE("reduced degrees") {
  const auto q = fixtures::q6_5333();
  CHECK(reduced_degree(q, Point{8, 1, 1, 1}, 2) == 2);
  CHECK(reduced_degree(q, Point{14, 1, 1, 1}, 3) == 3);
  for (const auto& a : lattice_points(q, 1, Region::Interior)) CHECK(reduced_degree(q, a, 1) == 1);
  CHECK_THROWS_AS(reduced_degree(q, Point{0, 1, 1, 1}, 2), Error);
}

TEST_CASE("int* degree and spectrum") {
  CHECK(int_star_degree(fixtures::q6_5333()) == 3);
  CHECK(int_star_degree(veronese_polytope({5, {4, 2, 2, 2}})) == 3);
  CHECK(int_star_degree(fixtures::path3_polytope()) == 1);
  CHECK(conjecture_spectrum(veronese_polytope({5, {4, 2, 2, 2}})));
  const auto analysis = int_star_analysis(fixtures::q6_5333());
  CHECK(analysis.realized == std::set<Coord>{1, 2, 3});
  CHECK(conjecture_spectrum(analysis));
  CHECK(conjecture_spectrum(fixtures::path3_polytope()));
  CHECK(int_star_degree(fixtures::polytope_of(family::cycle(3), {1, 1, 1})) == 2);
  CHECK_THROWS_AS(int_star_degree(fixtures::box(2, 1)), Error);
}

TEST_CASE("level*") {
  CHECK(level_star(fixtures::path3_polytope()).level);
  CHECK(level_star(veronese_polytope({4, {2, 2, 2}})).level);
  CHECK_FALSE(level_star(veronese_polytope({5, {2, 2, 2}})).level);

  const auto verdict = level_star(fixtures::k34_polytope());
  CHECK_FALSE(verdict.level);
  REQUIRE(verdict.witness);
  CHECK(verdict.witness->level == 2);
  CHECK(verdict.witness->point == Point{1, 1, 1, 2, 3, 3, 3});
  CHECK(verdict.interior_count == 1);

  CHECK_FALSE(level_star(fixtures::polytope_of(family::cycle(3), {1, 1, 1})).level);
}

TEST_CASE("levelness report") {
  const auto report = analyze_levelness(fixtures::k34_polytope(), {.with_table = true});
  CHECK(report.pseudo_gorenstein);
  CHECK(report.reflexive_up_to_translation == false);
  CHECK_FALSE(report.level);
  CHECK(report.int_star_degree == 2);
  REQUIRE(report.reduced_degree_table);
  CHECK(report.reduced_degree_table->at({1, Point(7, 1)}) == 1);

  const auto empty = analyze_levelness(fixtures::box(2, 1));
  CHECK(empty.interior_count == 0);
  CHECK_FALSE(empty.int_star_degree.has_value());
}
