#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "edgepoly/lattice.hpp"

namespace edgepoly {

/// Exactly one interior lattice point in P.
bool pseudo_gorenstein_star(const HPolytope& p, std::uint64_t node_cap = kDefaultNodeCap);

/// Smallest r >= 1 such that a = a0 + a' with a0 in int(rP) ∩ Z^n and
/// a' in (N - r)P ∩ Z^n. Throws NotAnInteriorPoint unless a ∈ int(NP).
Coord reduced_degree(const HPolytope& p, std::span<const Coord> a, Coord dilation,
                     std::uint64_t node_cap = kDefaultNodeCap);

struct LevelWitness {
  Coord level = 0;
  Point point;
  std::string explanation;
};

struct LevelVerdict {
  bool level = false;
  std::optional<LevelWitness> witness;  // lexicographically least failing (N, a)
  Coord scan_bound = 0;                 // largest dilation inspected
  std::uint64_t interior_count = 0;     // |int(P) ∩ Z^n|
};

/// Decides level* by checking, for N = 2..bound, that every a ∈ int(NP)
/// splits off a point of int(P) with remainder in (N-1)P.
///
/// P is decomposed into its coordinate blocks first; by default each block of
/// dimension d is scanned up to max(2, d - 1), the bound on reduced degrees.
/// `max_level` overrides the bound for every block.
LevelVerdict level_star(const HPolytope& p, std::optional<Coord> max_level = std::nullopt,
                        std::uint64_t node_cap = kDefaultNodeCap);

struct IntStarAnalysis {
  Coord degree = 0;          // largest reduced degree found
  Coord scan_bound = 0;      // largest dilation inspected
  std::set<Coord> realized;  // every reduced degree that occurs
};

/// Reduced degrees of all interior points of NP for N up to the scan bound
/// (default max(1, d - 1) per coordinate block), by the level recursion
///   r_N(a) = min(N, min_{u ∈ P ∩ Z^n} r_{N-1}(a - u)),
/// which is exact for normal polytopes. Throws EmptyInterior when no scanned
/// dilation has interior lattice points.
IntStarAnalysis int_star_analysis(const HPolytope& p, std::optional<Coord> max_level = std::nullopt,
                                  std::uint64_t node_cap = kDefaultNodeCap);

inline Coord int_star_degree(const HPolytope& p, std::optional<Coord> max_level = std::nullopt,
                             std::uint64_t node_cap = kDefaultNodeCap) {
  return int_star_analysis(p, max_level, node_cap).degree;
}

/// Every degree 1 <= i < int* degree is realised by some scanned point.
bool conjecture_spectrum(const IntStarAnalysis& analysis);
inline bool conjecture_spectrum(const HPolytope& p) {
  return conjecture_spectrum(int_star_analysis(p));
}

using ReducedDegreeTable = std::map<std::pair<Coord, Point>, Coord>;

/// (N, a) -> reduced degree for all interior points up to max_level, computed
/// on the whole polytope without block decomposition.
ReducedDegreeTable reduced_degree_table(const HPolytope& p, Coord max_level,
                                        std::uint64_t node_cap = kDefaultNodeCap);

struct LevelnessOptions {
  std::optional<Coord> max_level;
  std::uint64_t node_cap = kDefaultNodeCap;
  bool with_table = false;
};

struct LevelnessReport {
  std::uint64_t interior_count = 0;
  bool pseudo_gorenstein = false;
  bool level = false;
  std::optional<bool> reflexive_up_to_translation;  // set when pseudo-Gorenstein*
  std::optional<Coord> int_star_degree;             // unset when no interior point was found
  std::optional<LevelWitness> witness;
  Coord scan_bound = 0;
  std::optional<bool> conjecture_spectrum_holds;
  std::set<Coord> realized_degrees;
  std::optional<ReducedDegreeTable> reduced_degree_table;
};

LevelnessReport analyze_levelness(const HPolytope& p, const LevelnessOptions& options = {});

}  // namespace edgepoly
