#pragma once

// Deliberately naive reference computations used to cross-check the main
// pipeline. Nothing here calls into the bounded-powers, facets, lattice or
// levelness code.

#include <cstdint>
#include <set>
#include <vector>

#include "edgepoly/facets.hpp"
#include "edgepoly/graph.hpp"

namespace edgepoly::oracle {

struct BruteBases {
  Coord delta = 0;
  std::set<Point> bases;
};

/// Enumerates every edge-weight vector with vertex degrees <= c.
/// Throws InstanceTooLarge when prod(c_i + 1) > 10^7.
BruteBases brute_bases(const Graph& g, const BoundVector& c);

/// n! * vol(P) as an exact fraction.
struct NormalizedVolume {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
};

/// Exact normalised volume through vertex enumeration in rational arithmetic
/// and a recursive cone triangulation. Throws DimensionTooLarge for n > 4.
NormalizedVolume brute_volume(const HPolytope& p);

/// level* by flat enumeration of the bounding boxes, no pruning, no early
/// exit; scans N = 2..max_level.
bool brute_level_star(const HPolytope& p, Coord max_level);

}  // namespace edgepoly::oracle
