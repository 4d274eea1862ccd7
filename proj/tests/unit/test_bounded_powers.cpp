#include <doctest.h>

#include "edgepoly/bounded_powers.hpp"

using namespace edgepoly;

TEST_CASE("delta_c examples") {
  CHECK(delta_c(family::path(3), BoundVector{2, 3, 2}) == 3);
  CHECK(delta_c(family::cycle(3), BoundVector{1, 1, 1}) == 1);
  CHECK(delta_c(family::complete_bipartite(3, 4), BoundVector(7, 2)) == 6);
  CHECK(delta_c_bipartite_flow(family::complete_bipartite(3, 4), BoundVector(7, 2)) == 6);
  CHECK_FALSE(delta_c_bipartite_flow(family::cycle(3), BoundVector{1, 1, 1}).has_value());
  CHECK(delta_c(family::complete(5), BoundVector(5, 1)) == 2);
  CHECK(delta_c(family::complete(5), BoundVector(5, 2)) == 5);
}

TEST_CASE("realizing degree sequences") {
  const auto p3 = family::path(3);
  CHECK(realize_degree_sequence(p3, Point{2, 3, 1}, 3) == std::vector<Coord>{2, 1});
  const auto tri = family::cycle(3);
  // edges sorted as 12, 13, 23
  CHECK(realize_degree_sequence(tri, Point{2, 1, 1}, 2) == std::vector<Coord>{1, 1, 0});
  CHECK_FALSE(is_realizable(p3, Point{3, 0, 3}, 3));
  CHECK_THROWS_AS(realize_degree_sequence(p3, Point{1, 1, 1}, 2), Error);
  CHECK_FALSE(is_realizable(tri, Point{3, 1, 0}, 2));
}

TEST_CASE("basis enumeration") {
  auto tri = enumerate_bases(family::cycle(3), BoundVector{1, 1, 1});
  CHECK(tri.delta_c == 1);
  CHECK(tri.bases == std::vector<Point>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

  auto p3 = enumerate_bases(family::path(3), BoundVector{2, 3, 2});
  CHECK(p3.bases == std::vector<Point>{{1, 3, 2}, {2, 3, 1}});

  auto k22 = enumerate_bases(family::complete_bipartite(2, 2), BoundVector(4, 2));
  CHECK(k22.bases == std::vector<Point>{{2, 2, 2, 2}});

  CHECK_THROWS_AS(enumerate_bases(family::complete(6), BoundVector{2, 2, 2, 2, 2, 1}, 2), Error);
}

TEST_CASE("divisor sets") {
  auto tri = divisor_set(enumerate_bases(family::cycle(3), BoundVector{1, 1, 1}));
  CHECK(tri.size() == 7);
  CHECK(std::find(tri.begin(), tri.end(), Point{1, 1, 1}) == tri.end());
  CHECK(std::is_sorted(tri.begin(), tri.end()));

  auto box = divisor_set(enumerate_bases(family::complete_bipartite(2, 2), BoundVector(4, 2)));
  CHECK(box.size() == 81);

  auto p3 = divisor_set(enumerate_bases(family::path(3), BoundVector{2, 3, 2}));
  CHECK(p3.front() == Point{0, 0, 0});
  for (int i = 0; i < 3; ++i) {
    Point e(3, 0);
    e[i] = 1;
    CHECK(std::binary_search(p3.begin(), p3.end(), e));
  }
  CHECK(p3.size() == 32);
}

TEST_CASE("invalid bounds") {
  CHECK_THROWS_AS(delta_c(family::path(3), BoundVector{1, 0, 1}), Error);
  CHECK_THROWS_AS(delta_c(family::path(3), BoundVector{1, 1}), Error);
}
