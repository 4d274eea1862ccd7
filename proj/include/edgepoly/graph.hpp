#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgepoly/error.hpp"

namespace edgepoly {

/// Undirected edge between 1-based vertices, stored with u < v.
struct Edge {
  int u;
  int v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple finite graph on the vertex set [n] = {1, ..., n}.
///
/// Construction enforces: n >= 2, no loops, no isolated vertices. Repeated
/// edges collapse (set semantics). Edges are kept sorted lexicographically.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Neighbours of vertex v (1-based), ascending.
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v - 1); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool is_connected() const;
  bool is_tree() const;

  /// Two-colouring of the vertices (0/1 per vertex, 0-based index), empty if
  /// the graph has an odd cycle.
  std::vector<int> bipartition() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Vertex bounds c = (c_1, ..., c_n); every entry must be positive.
using BoundVector = std::vector<Coord>;

/// Throws InvalidParameters unless c has length g.order() and c_i >= 1.
void validate_bounds(const Graph& g, std::span<const Coord> c);

namespace family {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{m,n} on [m] and {m+1, ..., m+n}.
Graph complete_bipartite(int m, int n);
/// K_{1,n}: centre 1, leaves 2..n+1.
Graph star(int leaves);
/// Tree from a parent list: parents[k] is the parent of vertex k+2.
Graph tree_from_parents(std::span<const int> parents);

/// Dispatch by name: path, cycle, complete, complete-bipartite, star, tree.
Graph make(std::string_view kind, std::span<const int> params);

}  // namespace family

/// True iff two distinct leaves of the tree are at distance exactly 2.
/// Throws NotATree when t is not a tree.
bool leaf_distance_two_exists(const Graph& t);

/// All trees on n vertices up to isomorphism, in a deterministic order.
std::vector<Graph> trees_up_to_isomorphism(int n);

}  // namespace edgepoly
