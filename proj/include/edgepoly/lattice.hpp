#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edgepoly/facets.hpp"

namespace edgepoly {

inline constexpr std::uint64_t kDefaultNodeCap = 100'000'000;

enum class Region { Full, Interior };

/// Integer points of N*P (Region::Full) or of its interior, ascending
/// lexicographic. The interior is where every listed inequality is strict.
std::vector<Point> lattice_points(const HPolytope& p, Coord dilation, Region region,
                                  std::uint64_t node_cap = kDefaultNodeCap);

/// |N*P ∩ Z^n| or its interior analogue; N = 0 gives 1 (full) and 0 (interior).
std::uint64_t count_lattice_points(const HPolytope& p, Coord dilation, Region region,
                                   std::uint64_t node_cap = kDefaultNodeCap);

/// Pure inequality test of x against N*P (or its interior).
bool contains(const HPolytope& p, std::span<const Coord> x, Coord dilation, Region region);

struct DeltaVector {
  int dim = 0;
  std::vector<std::uint64_t> counts;  // i(P, N) for N = 0..dim
  std::vector<std::int64_t> delta;    // delta_0..delta_dim
  std::uint64_t interior_count = 0;   // |int(P) ∩ Z^n|, for the reciprocity check

  /// delta_0 = 1, delta_1 = i(P,1) - (n+1), delta_n = interior count, delta >= 0.
  bool consistent() const;
};

DeltaVector delta_vector(const HPolytope& p, std::uint64_t node_cap = kDefaultNodeCap);

/// delta_0 <= ... <= delta_{floor(n/2)} >= ... >= delta_n.
bool is_unimodal(std::span<const std::int64_t> delta);
inline bool is_unimodal(const DeltaVector& d) { return is_unimodal(d.delta); }

struct NormalityResult {
  bool normal = true;
  Coord level = 0;   // dilation of the counterexample, 0 if none
  Point counterexample;
};

/// Checks N*P ∩ Z^n = (P ∩ Z^n) + ... + (P ∩ Z^n) for N = 2..max_level.
NormalityResult normality_check(const HPolytope& p, Coord max_level,
                                std::uint64_t node_cap = kDefaultNodeCap);

/// The unique interior lattice point is at lattice distance 1 from every
/// facet. Throws NotPseudoGorenstein unless exactly one interior point exists.
bool reflexive_up_to_translation(const HPolytope& p, std::uint64_t node_cap = kDefaultNodeCap);

/// Connected components of the coordinates, linking coordinates that share an
/// upper inequality. P is the product of its restrictions to these blocks.
std::vector<Subset> coordinate_blocks(const HPolytope& p);

/// Restriction of P to the coordinates in block, renumbered 1..|block|.
HPolytope restrict_to_block(const HPolytope& p, Subset block);

}  // namespace edgepoly
