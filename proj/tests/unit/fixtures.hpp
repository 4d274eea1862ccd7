#pragma once

#include <vector>

#include "edgepoly/bounded_powers.hpp"
#include "edgepoly/facets.hpp"
#include "edgepoly/graph.hpp"

namespace fixtures {

using namespace edgepoly;

inline HPolytope polytope_of(const Graph& g, const BoundVector& c) {
  return facets(enumerate_bases(g, c));
}

inline HPolytope path3_polytope() { return polytope_of(family::path(3), {2, 3, 2}); }

inline HPolytope k34_polytope() {
  return polytope_of(family::complete_bipartite(3, 4), BoundVector(7, 2));
}

inline HPolytope box(int n, Coord side) {
  std::vector<Facet> up;
  for (int i = 0; i < n; ++i) up.push_back({Subset{1} << i, side});
  return HPolytope(n, up);
}

inline HPolytope q6_5333() { return veronese_polytope({6, {5, 3, 3, 3}}); }

}  // namespace fixtures
