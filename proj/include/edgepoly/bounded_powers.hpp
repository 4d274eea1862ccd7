#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edgepoly/graph.hpp"

namespace edgepoly {

inline constexpr std::uint64_t kDefaultCandidateCap = 10'000'000;

/// Exponent vectors of the minimal generators of the top bounded power
/// (I(G)^delta)_c, i.e. the bases of the discrete polymatroid D(G,c).
struct BasisSet {
  int dim = 0;
  Coord delta_c = 0;
  std::vector<Point> bases;  // ascending lexicographic order
};

/// Largest q with (I(G)^q)_c != 0: the maximum total multiplicity of an edge
/// multiset whose degree at every vertex i stays within c_i.
///
/// Branch and bound over edge multiplicities in edge order.
Coord delta_c(const Graph& g, std::span<const Coord> c);

/// Same value by max-flow, available only for bipartite graphs.
std::optional<Coord> delta_c_bipartite_flow(const Graph& g, std::span<const Coord> c);

/// Edge multiplicities (indexed like g.edges()) whose vertex degrees equal a,
/// or nullopt when a is not the degree vector of any edge multiset.
///
/// Throws DegreeSumMismatch when sum(a) != 2q.
std::optional<std::vector<Coord>> realize_degree_sequence(const Graph& g,
                                                          std::span<const Coord> a, Coord q);

inline bool is_realizable(const Graph& g, std::span<const Coord> a, Coord q) {
  return realize_degree_sequence(g, a, q).has_value();
}

/// B(G,c). Throws InstanceTooLarge when more than candidate_cap candidate
/// vectors would have to be screened.
BasisSet enumerate_bases(const Graph& g, std::span<const Coord> c,
                         std::uint64_t candidate_cap = kDefaultCandidateCap);

/// D(G,c): every b with 0 <= b <= a for some basis a, ascending lexicographic.
std::vector<Point> divisor_set(const BasisSet& basis);

}  // namespace edgepoly
