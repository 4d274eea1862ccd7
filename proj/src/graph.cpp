#include "edgepoly/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace edgepoly {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 2) fail(ErrorCode::InvalidParameters, "a graph needs at least 2 vertices");
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n) fail(ErrorCode::InvalidParameters, "edge endpoint outside [n]");
    if (e.u == e.v) fail(ErrorCode::InvalidParameters, "loops are not allowed");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(n, {});
  for (const auto& e : edges_) {
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    if (adjacency_[v].empty())
      fail(ErrorCode::InvalidParameters, "vertex " + std::to_string(v + 1) + " is isolated");
    std::sort(adjacency_[v].begin(), adjacency_[v].end());
  }
}

bool Graph::is_connected() const {
  DisjointSets sets(n_);
  int components = n_;
  for (const auto& e : edges_)
    if (sets.unite(e.u - 1, e.v - 1)) --components;
  return components == 1;
}

bool Graph::is_tree() const {
  return static_cast<int>(edges_.size()) == n_ - 1 && is_connected();
}

std::vector<int> Graph::bipartition() const {
  std::vector<int> colour(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adjacency_[v]) {
        if (colour[w - 1] == -1) {
          colour[w - 1] = 1 - colour[v];
          queue.push_back(w - 1);
        } else if (colour[w - 1] == colour[v]) {
          return {};
        }
      }
    }
  }
  return colour;
}

void validate_bounds(const Graph& g, std::span<const Coord> c) {
  if (static_cast<int>(c.size()) != g.order())
    fail(ErrorCode::InvalidParameters, "bound vector length " + std::to_string(c.size()) +
                                           " does not match vertex count " +
                                           std::to_string(g.order()));
  for (Coord ci : c)
    if (ci < 1) fail(ErrorCode::InvalidParameters, "bounds must be positive integers");
}

namespace family {

Graph path(int n) {
  if (n < 2) fail(ErrorCode::InvalidParameters, "path needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) fail(ErrorCode::InvalidParameters, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph(n, std::move(edges));
}

Graph complete(int n) {
  if (n < 2) fail(ErrorCode::InvalidParameters, "complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) fail(ErrorCode::InvalidParameters, "K_{m,n} needs m, n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = m + 1; j <= m + n; ++j) edges.push_back({i, j});
  return Graph(m + n, std::move(edges));
}

Graph star(int leaves) {
  if (leaves < 1) fail(ErrorCode::InvalidParameters, "star needs at least one leaf");
  return complete_bipartite(1, leaves);
}

Graph tree_from_parents(std::span<const int> parents) {
  const int n = static_cast<int>(parents.size()) + 1;
  std::vector<Edge> edges;
  for (int k = 0; k < static_cast<int>(parents.size()); ++k) {
    const int child = k + 2;
    if (parents[k] < 1 || parents[k] >= child)
      fail(ErrorCode::InvalidParameters, "parent of vertex " + std::to_string(child) +
                                             " must lie in [1, " + std::to_string(child - 1) + "]");
    edges.push_back({parents[k], child});
  }
  return Graph(n, std::move(edges));
}

Graph make(std::string_view kind, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      fail(ErrorCode::InvalidParameters, std::string(kind) + " takes " + std::to_string(count) +
                                             " parameter(s)");
  };
  if (kind == "path") { need(1); return path(params[0]); }
  if (kind == "cycle") { need(1); return cycle(params[0]); }
  if (kind == "complete") { need(1); return complete(params[0]); }
  if (kind == "complete-bipartite") { need(2); return complete_bipartite(params[0], params[1]); }
  if (kind == "star") { need(1); return star(params[0]); }
  if (kind == "tree") return tree_from_parents(params);
  fail(ErrorCode::InvalidParameters, "unknown graph family '" + std::string(kind) + "'");
}

}  // namespace family

bool leaf_distance_two_exists(const Graph& t) {
  if (!t.is_tree()) fail(ErrorCode::NotATree, "graph is not a tree");
  // Two leaves are at distance 2 exactly when they share their unique neighbour.
  std::vector<int> leaves_at(t.order() + 1, 0);
  for (int v = 1; v <= t.order(); ++v)
    if (t.degree(v) == 1 && ++leaves_at[t.neighbors(v).front()] >= 2) return true;
  return false;
}

namespace {

// AHU encoding of a rooted tree.
std::string rooted_code(const Graph& t, int v, int parent) {
  std::vector<std::string> children;
  for (int w : t.neighbors(v))
    if (w != parent) children.push_back(rooted_code(t, w, v));
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  return code + ")";
}

std::vector<int> tree_centers(const Graph& t) {
  std::vector<int> degree(t.order() + 1);
  std::vector<int> layer;
  for (int v = 1; v <= t.order(); ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = t.order();
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : t.neighbors(v))
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  return layer;
}

std::string canonical_tree_code(const Graph& t) {
  std::string best;
  for (int c : tree_centers(t)) {
    auto code = rooted_code(t, c, 0);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> trees_up_to_isomorphism(int n) {
  if (n < 2) fail(ErrorCode::InvalidParameters, "trees need n >= 2");
  if (n > 10) fail(ErrorCode::InstanceTooLarge, "tree catalogue is limited to n <= 10");
  std::map<std::string, Graph> catalogue{{canonical_tree_code(family::path(2)), family::path(2)}};
  for (int order = 3; order <= n; ++order) {
    std::map<std::string, Graph> grown;
    for (const auto& [code, t] : catalogue) {
      for (int v = 1; v < order; ++v) {
        auto edges = t.edges();
        edges.push_back({v, order});
        Graph bigger(order, std::move(edges));
        grown.try_emplace(canonical_tree_code(bigger), std::move(bigger));
      }
    }
    catalogue = std::move(grown);
  }
  std::vector<Graph> out;
  for (auto& [code, t] : catalogue) out.push_back(t);
  return out;
}

}  // namespace edgepoly
