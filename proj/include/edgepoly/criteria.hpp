#pragma once

#include <optional>
#include <vector>

#include "edgepoly/levelness.hpp"

namespace edgepoly {

/// K_{m,n} bounds with the heavier side first: vertices [m] carry the larger
/// bound sum, vertices m+1..m+n the smaller one (sum S).
struct BipartiteSpec {
  int m = 0;
  int n = 0;
  BoundVector c;

  Coord heavy_sum() const;
  Coord light_sum() const;  // S
  /// {i in [m] : c_i = S}, 1-based.
  std::vector<int> saturated() const;
  /// [m] minus saturated().
  std::vector<int> unsaturated() const;
};

/// Validates sum_{i<=m} c_i > S and c_i <= S on [m]; throws HypothesisViolated.
BipartiteSpec make_bipartite_spec(int m, int n, BoundVector c);

/// Relabels so the heavier side comes first. Returns nullopt when both sides
/// have equal sums (the polytope is then the box 0 <= x <= c).
std::optional<BipartiteSpec> normalize_bipartite(int m, int n, const BoundVector& c);

/// Interior lattice points exist iff c_i >= 2 on the unsaturated heavy
/// vertices and on the light side, and S >= m + 1.
bool bipartite_interior_nonempty(const BipartiteSpec& spec);

struct SubsetViolation {
  int condition = 0;         // 1 or 2
  std::vector<int> subset;  // 1-based
};

struct CriterionVerdict {
  bool level = false;
  std::optional<SubsetViolation> violation;  // first in (size, lexicographic) order
};

/// Numerical level* criterion for conv(D(K_{m,n}, c)). Requires the interior
/// hypotheses (S >= m + 1, c_i >= 2 off the saturated set); throws
/// HypothesisViolated otherwise.
CriterionVerdict bipartite_level_criterion(const BipartiteSpec& spec);

/// Numerical level* criterion for Q(a; c).
CriterionVerdict veronese_level_criterion(const VeroneseSpec& spec);

/// Closed form for uniform c: level* iff a avoids
/// [kc+n-2k+2, kc-1] ∪ [(n-k)c+1, 2k+(n-k)c-n] for every k = 1..n.
bool veronese_uniform_formula(int n, Coord c, Coord a);

/// A tree admits bounds making conv(D(T,c)) pseudo-Gorenstein* iff no two
/// leaves are at distance 2.
bool tree_labeling_pseudo_gorenstein(const Graph& t);

/// K_{m,n} admits such bounds iff min <= max <= 2 min - 1.
bool bipartite_labeling_classification(int m, int n);

struct ContainmentResult {
  bool holds = false;   // N * conv(D(G,c)) ⊆ conv(D(G,Nc))
  bool strict = false;  // some lattice point of conv(D(G,Nc)) lies outside N * conv(D(G,c))
};

ContainmentResult dilation_containment(const Graph& g, const BoundVector& c, Coord dilation,
                                       std::uint64_t node_cap = kDefaultNodeCap);

/// First c in lexicographic order over [1..c_max]^n making conv(D(G,c))
/// pseudo-Gorenstein*. Absence only means no witness within the box.
std::optional<BoundVector> search_labeling(const Graph& g, Coord c_max,
                                           std::uint64_t node_cap = kDefaultNodeCap);

}  // namespace edgepoly
