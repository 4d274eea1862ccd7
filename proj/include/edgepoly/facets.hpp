#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edgepoly/bounded_powers.hpp"

namespace edgepoly {

/// Subset of [n] as a bitmask: bit i-1 set means i is a member.
using Subset = std::uint32_t;

inline constexpr int kMaxFacetScanDim = 16;
inline constexpr int kMaxPolytopeDim = 31;

std::vector<int> subset_members(Subset s);  // 1-based, ascending
Subset subset_from_members(std::span<const int> members);
inline int subset_size(Subset s) { return __builtin_popcount(s); }

/// Orders subsets by size, then lexicographically on their sorted members.
bool subset_less(Subset a, Subset b);

/// Upper inequality sum_{i in subset} x_i <= bound.
struct Facet {
  Subset subset;
  Coord bound;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Polytope {x in R^n : x >= 0, sum_{i in A} x_i <= t for every (A, t)}.
///
/// All normals are 0/1 vectors. Construction requires every coordinate to be
/// covered by some upper inequality and every bound to be positive, which
/// makes the polytope bounded and full-dimensional. Inequalities are kept in
/// (size, lexicographic) order of their subsets.
class HPolytope {
 public:
  HPolytope(int dim, std::vector<Facet> upper);

  int dim() const noexcept { return dim_; }
  const std::vector<Facet>& upper() const noexcept { return upper_; }

  /// Largest value of x_i over the polytope: min bound over inequalities on i.
  Coord coordinate_bound(int i) const;  // 0-based i

  friend bool operator==(const HPolytope&, const HPolytope&) = default;

 private:
  int dim_;
  std::vector<Facet> upper_;
};

std::string to_string(const HPolytope& p);

/// Ground set rank function of a basis set, memoised over all 2^n subsets.
class RankOracle {
 public:
  explicit RankOracle(const BasisSet& basis);

  int dim() const noexcept { return dim_; }
  Coord operator()(Subset x) const { return rank_.at(x); }

 private:
  int dim_;
  std::vector<Coord> rank_;
};

/// max over bases of sum_{i in X} a_i (0 for the empty set).
Coord rank(const BasisSet& basis, Subset x);

/// rank(A) < rank(B) for every proper superset B of A.
bool is_closed(const RankOracle& rank, Subset a);

/// |A| = 1, or no split A = A' + A'' has rank(A) = rank(A') + rank(A'').
bool is_inseparable(const RankOracle& rank, Subset a);

/// Irredundant facet system of conv(D(G,c)): one upper inequality per closed
/// and inseparable subset. Throws DimensionTooLarge beyond 16 coordinates.
HPolytope facets(const BasisSet& basis);

/// Parameters (a; c_1, ..., c_n) of a Veronese-type polytope.
struct VeroneseSpec {
  Coord a = 0;
  std::vector<Coord> c;

  int dim() const noexcept { return static_cast<int>(c.size()); }
};

/// Throws InvalidVeroneseParameters unless a > c_1 >= ... >= c_n >= 2,
/// a >= n + 1 and a < sum c_i.
void validate(const VeroneseSpec& spec);

/// Box 0 <= x_i <= c_i cut by x_1 + ... + x_n <= a.
HPolytope veronese_polytope(const VeroneseSpec& spec);

/// conv(D(K_{1,n}, (a, c_1, ..., c_n))) computed through the basis
/// enumeration and facet pipeline; the centre is coordinate 1.
HPolytope star_prism(const VeroneseSpec& spec);

/// The prism {0 <= x_1 <= a} x Q(a; c) written directly.
HPolytope veronese_prism(const VeroneseSpec& spec);

}  // namespace edgepoly
