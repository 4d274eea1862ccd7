#include "edgepoly/bounded_powers.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace edgepoly {

namespace {

class EdgeMultiplicitySearch {
 public:
  EdgeMultiplicitySearch(const Graph& g, std::span<const Coord> c)
      : edges_(g.edges()), remaining_(c.begin(), c.end()) {
    const int m = static_cast<int>(edges_.size());
    // touched_[k][v]: vertex v (0-based) is an endpoint of some edge k..m-1.
    touched_.assign(m + 1, std::vector<char>(g.order(), 0));
    for (int k = m - 1; k >= 0; --k) {
      touched_[k] = touched_[k + 1];
      touched_[k][edges_[k].u - 1] = 1;
      touched_[k][edges_[k].v - 1] = 1;
    }
  }

  Coord run() {
    best_ = greedy();
    search(0, 0);
    return best_;
  }

 private:
  Coord greedy() const {
    auto r = remaining_;
    Coord total = 0;
    for (const auto& e : edges_) {
      Coord w = std::min(r[e.u - 1], r[e.v - 1]);
      r[e.u - 1] -= w;
      r[e.v - 1] -= w;
      total += w;
    }
    return total;
  }

  Coord bound(std::size_t k) const {
    Coord capacity = 0;
    for (std::size_t v = 0; v < remaining_.size(); ++v)
      if (touched_[k][v]) capacity += remaining_[v];
    return capacity / 2;
  }

  void search(std::size_t k, Coord used) {
    if (k == edges_.size()) {
      best_ = std::max(best_, used);
      return;
    }
    if (used + bound(k) <= best_) return;
    const int u = edges_[k].u - 1;
    const int v = edges_[k].v - 1;
    for (Coord w = std::min(remaining_[u], remaining_[v]); w >= 0; --w) {
      remaining_[u] -= w;
      remaining_[v] -= w;
      search(k + 1, used + w);
      remaining_[u] += w;
      remaining_[v] += w;
    }
  }

  const std::vector<Edge>& edges_;
  std::vector<Coord> remaining_;
  std::vector<std::vector<char>> touched_;
  Coord best_ = 0;
};

// Dense Edmonds-Karp; graphs here have at most a few dozen vertices.
Coord max_flow(std::vector<std::vector<Coord>> cap, int source, int sink) {
  const int nodes = static_cast<int>(cap.size());
  Coord flow = 0;
  while (true) {
    std::vector<int> prev(nodes, -1);
    prev[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && prev[sink] == -1) {
      int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < nodes; ++y)
        if (prev[y] == -1 && cap[x][y] > 0) {
          prev[y] = x;
          queue.push_back(y);
        }
    }
    if (prev[sink] == -1) return flow;
    Coord push = std::numeric_limits<Coord>::max();
    for (int y = sink; y != source; y = prev[y]) push = std::min(push, cap[prev[y]][y]);
    for (int y = sink; y != source; y = prev[y]) {
      cap[prev[y]][y] -= push;
      cap[y][prev[y]] += push;
    }
    flow += push;
  }
}

class DegreeRealizer {
 public:
  explicit DegreeRealizer(const Graph& g) : g_(g), index_(g.order(), std::vector<int>(g.order(), -1)) {
    for (int k = 0; k < static_cast<int>(g.edges().size()); ++k) {
      const auto& e = g.edges()[k];
      index_[e.u - 1][e.v - 1] = k;
      index_[e.v - 1][e.u - 1] = k;
    }
  }

  std::optional<std::vector<Coord>> solve(std::vector<Coord> r) {
    std::vector<Coord> weights(g_.edges().size(), 0);
    if (search(std::move(r), weights)) return weights;
    return std::nullopt;
  }

 private:
  void add(int v, int w, Coord amount, std::vector<Coord>& r, std::vector<Coord>& weights) const {
    weights[index_[v][w]] += amount;
    r[v] -= amount;
    r[w] -= amount;
  }

  // Forces weights at vertices with a single live neighbour and checks the
  // local degree condition. Returns false on contradiction.
  bool peel(std::vector<Coord>& r, std::vector<Coord>& weights) const {
    const int n = g_.order();
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (r[v] == 0) continue;
        int live = 0;
        int partner = -1;
        Coord reach = 0;
        for (int w1 : g_.neighbors(v + 1)) {
          if (r[w1 - 1] > 0) {
            ++live;
            partner = w1 - 1;
            reach += r[w1 - 1];
          }
        }
        if (live == 0 || reach < r[v]) return false;
        if (live == 1) {
          if (r[partner] < r[v]) return false;
          add(v, partner, r[v], r, weights);
          changed = true;
        }
      }
    }
    return true;
  }

  bool search(std::vector<Coord> r, std::vector<Coord>& weights) {
    if (!peel(r, weights)) return false;
    auto first = std::find_if(r.begin(), r.end(), [](Coord x) { return x > 0; });
    if (first == r.end()) return true;
    if (std::accumulate(r.begin(), r.end(), Coord{0}) % 2 != 0) return false;
    if (failed_.contains(r)) return false;

    const int v = static_cast<int>(first - r.begin());
    std::vector<int> partners;
    for (int w1 : g_.neighbors(v + 1))
      if (r[w1 - 1] > 0) partners.push_back(w1 - 1);

    // Distribute r[v] over the live neighbours; v is then exhausted.
    std::vector<Coord> share(partners.size(), 0);
    std::function<bool(std::size_t, Coord)> distribute = [&](std::size_t k, Coord left) -> bool {
      if (k + 1 == partners.size()) {
        if (left > r[partners[k]]) return false;
        share[k] = left;
        auto next_r = r;
        auto next_w = weights;
        for (std::size_t j = 0; j < partners.size(); ++j)
          if (share[j] > 0) add(v, partners[j], share[j], next_r, next_w);
        if (search(std::move(next_r), next_w)) {
          weights = std::move(next_w);
          return true;
        }
        return false;
      }
      for (Coord s = std::min(left, r[partners[k]]); s >= 0; --s) {
        share[k] = s;
        if (distribute(k + 1, left - s)) return true;
      }
      return false;
    };
    if (distribute(0, r[v])) return true;
    failed_.insert(std::move(r));
    return false;
  }

  const Graph& g_;
  std::vector<std::vector<int>> index_;
  std::set<std::vector<Coord>> failed_;
};

}  // namespace

Coord delta_c(const Graph& g, std::span<const Coord> c) {
  validate_bounds(g, c);
  return EdgeMultiplicitySearch(g, c).run();
}

std::optional<Coord> delta_c_bipartite_flow(const Graph& g, std::span<const Coord> c) {
  validate_bounds(g, c);
  const auto colour = g.bipartition();
  if (colour.empty()) return std::nullopt;
  const int n = g.order();
  const int source = n;
  const int sink = n + 1;
  std::vector<std::vector<Coord>> cap(n + 2, std::vector<Coord>(n + 2, 0));
  Coord unbounded = std::accumulate(c.begin(), c.end(), Coord{0});
  for (int v = 0; v < n; ++v) {
    if (colour[v] == 0)
      cap[source][v] = c[v];
    else
      cap[v][sink] = c[v];
  }
  for (const auto& e : g.edges()) {
    int a = e.u - 1;
    int b = e.v - 1;
    if (colour[a] != 0) std::swap(a, b);
    cap[a][b] = unbounded;
  }
  return max_flow(std::move(cap), source, sink);
}

std::optional<std::vector<Coord>> realize_degree_sequence(const Graph& g,
                                                          std::span<const Coord> a, Coord q) {
  if (static_cast<int>(a.size()) != g.order())
    fail(ErrorCode::InvalidParameters, "degree vector length does not match the graph");
  Coord sum = 0;
  for (Coord ai : a) {
    if (ai < 0) fail(ErrorCode::InvalidParameters, "degree vector entries must be nonnegative");
    sum += ai;
  }
  if (sum != 2 * q)
    fail(ErrorCode::DegreeSumMismatch,
         "degree sum " + std::to_string(sum) + " differs from 2q = " + std::to_string(2 * q));
  return DegreeRealizer(g).solve(std::vector<Coord>(a.begin(), a.end()));
}

BasisSet enumerate_bases(const Graph& g, std::span<const Coord> c, std::uint64_t candidate_cap) {
  const Coord delta = delta_c(g, c);
  const int n = g.order();
  BasisSet out{n, delta, {}};

  std::vector<Coord> suffix(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + c[i];

  DegreeRealizer realizer(g);
  Point a(n, 0);
  std::uint64_t candidates = 0;
  std::function<void(int, Coord)> descend = [&](int i, Coord left) {
    if (i == n) {
      if (++candidates > candidate_cap)
        fail(ErrorCode::InstanceTooLarge,
             "more than " + std::to_string(candidate_cap) + " candidate exponent vectors");
      if (realizer.solve(a)) out.bases.push_back(a);
      return;
    }
    const Coord lo = std::max<Coord>(0, left - suffix[i + 1]);
    const Coord hi = std::min(c[i], left);
    for (Coord x = lo; x <= hi; ++x) {
      a[i] = x;
      descend(i + 1, left - x);
    }
    a[i] = 0;
  };
  descend(0, 2 * delta);
  return out;
}

std::vector<Point> divisor_set(const BasisSet& basis) {
  const int n = basis.dim;
  std::vector<Point> out;
  Point b(n, 0);
  std::vector<const Point*> all;
  for (const auto& a : basis.bases) all.push_back(&a);

  std::function<void(int, const std::vector<const Point*>&)> descend =
      [&](int i, const std::vector<const Point*>& dominating) {
        if (i == n) {
          out.push_back(b);
          return;
        }
        Coord top = 0;
        for (const Point* a : dominating) top = std::max(top, (*a)[i]);
        for (Coord x = 0; x <= top; ++x) {
          std::vector<const Point*> still;
          for (const Point* a : dominating)
            if ((*a)[i] >= x) still.push_back(a);
          b[i] = x;
          descend(i + 1, still);
        }
        b[i] = 0;
      };
  if (!all.empty()) descend(0, all);
  return out;
}

}  // namespace edgepoly
