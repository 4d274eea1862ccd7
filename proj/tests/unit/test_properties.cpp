#include <doctest.h>

#include <random>

#include "edgepoly/criteria.hpp"
#include "edgepoly/oracle.hpp"
#include "fixtures.hpp"

using namespace edgepoly;

namespace {

struct Instance {
  Graph g;
  BoundVector c;
};

// Small graphs with every bound vector drawn from a seeded generator.
std::vector<Instance> sample_instances(std::size_t per_graph, Coord c_max, unsigned seed) {
  std::vector<Graph> graphs = {family::path(3),   family::path(4),  family::path(5),
                               family::cycle(3),  family::cycle(4), family::cycle(5),
                               family::star(3),   family::star(4),  family::complete(4),
                               family::complete_bipartite(2, 2), family::complete_bipartite(2, 3)};
  std::mt19937 rng(seed);
  for (int k = 0; k < 4; ++k) {
    std::vector<int> parents;
    for (int v = 2; v <= 6; ++v) parents.push_back(std::uniform_int_distribution<int>(1, v - 1)(rng));
    graphs.push_back(family::tree_from_parents(parents));
  }
  std::vector<Instance> out;
  std::uniform_int_distribution<Coord> bound(1, c_max);
  for (const auto& g : graphs) {
    for (std::size_t s = 0; s < per_graph; ++s) {
      BoundVector c(g.order());
      for (auto& ci : c) ci = bound(rng);
      out.push_back({g, c});
    }
  }
  return out;
}

// Affine dimension of integer points by fraction-free elimination.
int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<__int128>> m;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    std::vector<__int128> row;
    for (std::size_t i = 0; i < pts[k].size(); ++i) row.push_back(pts[k][i] - pts[0][i]);
    m.push_back(std::move(row));
  }
  int rank = 0;
  const std::size_t cols = pts[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const __int128 f = m[r][col];
      const __int128 p = m[rank][col];
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * p - m[rank][k] * f;
    }
    ++rank;
  }
  return rank;
}

Coord coordinate_sum(const Point& a, Subset s) {
  Coord t = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((s >> i) & 1u) t += a[i];
  return t;
}

}  // namespace

TEST_CASE("bases satisfy symmetric exchange") {
  for (const auto& [g, c] : sample_instances(3, 3, 11)) {
    const auto basis = enumerate_bases(g, c);
    const std::set<Point> set(basis.bases.begin(), basis.bases.end());
    for (const auto& u : basis.bases) {
      for (const auto& v : basis.bases) {
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (u[i] <= v[i]) continue;
          bool found = false;
          for (std::size_t j = 0; j < u.size() && !found; ++j) {
            if (u[j] >= v[j]) continue;
            Point a = u;
            --a[i];
            ++a[j];
            Point b = v;
            ++b[i];
            --b[j];
            found = set.contains(a) && set.contains(b);
          }
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("rank is monotone and submodular") {
  for (const auto& [g, c] : sample_instances(2, 3, 12)) {
    const RankOracle r(enumerate_bases(g, c));
    const Subset full = (Subset{1} << g.order()) - 1;
    CHECK(r(0) == 0);
    for (Subset x = 0; x <= full; ++x) {
      for (Subset y = x; y <= full; ++y) {
        if ((x & y) == x) CHECK(r(x) <= r(y));
        CHECK(r(x | y) + r(x & y) <= r(x) + r(y));
      }
    }
  }
}

TEST_CASE("H-representation lattice points equal the divisor set") {
  for (const auto& [g, c] : sample_instances(4, 3, 13)) {
    const auto basis = enumerate_bases(g, c);
    CHECK(lattice_points(facets(basis), 1, Region::Full) == divisor_set(basis));
  }
}

TEST_CASE("every upper inequality is a facet") {
  for (const auto& [g, c] : sample_instances(3, 3, 14)) {
    const auto p = facets(enumerate_bases(g, c));
    const auto pts = lattice_points(p, 1, Region::Full);
    for (const auto& f : p.upper()) {
      std::vector<Point> tight;
      for (const auto& x : pts)
        if (coordinate_sum(x, f.subset) == f.bound) tight.push_back(x);
      CHECK(affine_dimension(tight) == p.dim() - 1);
    }
    CHECK(affine_dimension(pts) == p.dim());
  }
}

TEST_CASE("max-flow and branch and bound agree on delta_c") {
  std::mt19937 rng(15);
  std::uniform_int_distribution<Coord> bound(1, 6);
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 4; ++n) {
      const auto g = family::complete_bipartite(m, n);
      for (int s = 0; s < 10; ++s) {
        BoundVector c(m + n);
        for (auto& ci : c) ci = bound(rng);
        CHECK(delta_c_bipartite_flow(g, c) == delta_c(g, c));
      }
    }
  }
  for (const auto& [g, c] : sample_instances(3, 4, 16))
    if (!g.bipartition().empty()) CHECK(delta_c_bipartite_flow(g, c) == delta_c(g, c));
}

TEST_CASE("tree realisations are unique") {
  for (const auto& [g, c] : sample_instances(3, 3, 17)) {
    if (!g.is_tree()) continue;
    const auto basis = enumerate_bases(g, c);
    for (const auto& a : basis.bases) {
      const auto w = realize_degree_sequence(g, a, basis.delta_c);
      REQUIRE(w);
      // On a tree, peeling leaves determines every edge weight.
      Point degree(g.order(), 0);
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        degree[g.edges()[e].u - 1] += (*w)[e];
        degree[g.edges()[e].v - 1] += (*w)[e];
      }
      CHECK(degree == a);
      std::vector<Coord> expected(g.size(), -1);
      Point left = a;
      std::vector<int> live(g.order());
      for (int v = 1; v <= g.order(); ++v) live[v - 1] = g.degree(v);
      for (std::size_t round = 0; round < g.size(); ++round) {
        for (std::size_t e = 0; e < g.size(); ++e) {
          if (expected[e] >= 0) continue;
          const auto [u, v] = g.edges()[e];
          const int leaf = live[u - 1] == 1 ? u : (live[v - 1] == 1 ? v : 0);
          if (leaf == 0) continue;
          expected[e] = left[leaf - 1];
          left[u - 1] -= expected[e];
          left[v - 1] -= expected[e];
          --live[u - 1];
          --live[v - 1];
        }
      }
      CHECK(expected == *w);
    }
  }
}

TEST_CASE("level* agrees across the direct, DP and brute-force paths") {
  std::vector<HPolytope> polys;
  for (const auto& [g, c] : sample_instances(3, 3, 18)) {
    if (g.order() > 5) continue;
    BoundVector lifted = c;
    for (auto& ci : lifted) ++ci;
    polys.push_back(fixtures::polytope_of(g, lifted));
  }
  for (Coord a = 4; a <= 6; ++a) polys.push_back(veronese_polytope({a, {3, 2, 2}}));
  int nonempty = 0;
  int level = 0;
  for (const auto& p : polys) {
    const auto verdict = level_star(p, 3);
    nonempty += verdict.interior_count > 0;
    level += verdict.level;
    if (verdict.interior_count == 0) {
      CHECK_FALSE(verdict.level);
      continue;
    }
    CHECK(verdict.level == oracle::brute_level_star(p, 3));
    CHECK(verdict.level == (int_star_degree(p, 3) == 1));
  }
  CHECK(nonempty > 20);
  CHECK(level > 0);
  CHECK(level < nonempty);
}

TEST_CASE("DP reduced degrees match the direct definition") {
  std::vector<HPolytope> polys = {fixtures::q6_5333(), fixtures::path3_polytope(),
                                  veronese_polytope({5, {4, 2, 2, 2}}),
                                  fixtures::polytope_of(family::cycle(4), {2, 3, 2, 2})};
  for (const auto& p : polys) {
    for (const auto& [key, r] : reduced_degree_table(p, 3))
      CHECK(reduced_degree(p, key.second, key.first) == r);
  }
}

namespace {

bool single_peaked(const std::vector<std::int64_t>& d) {
  std::size_t k = 0;
  while (k + 1 < d.size() && d[k] <= d[k + 1]) ++k;
  while (k + 1 < d.size() && d[k] >= d[k + 1]) ++k;
  return k + 1 == d.size();
}

}  // namespace

TEST_CASE("delta vectors of level* polytopes are single-peaked") {
  int even_level = 0;
  for (const auto& [g, c] : sample_instances(2, 3, 19)) {
    const auto p = fixtures::polytope_of(g, c);
    const auto d = delta_vector(p);
    CHECK(d.consistent());
    if (!level_star(p).level) continue;
    CHECK(single_peaked(d.delta));
    if (p.dim() % 2 == 0) {
      CHECK(is_unimodal(d));
      ++even_level;
    }
  }
  CHECK(even_level > 0);
}

TEST_CASE("odd-dimensional level* polytope peaking past floor(n/2)") {
  const auto p = fixtures::path3_polytope();
  REQUIRE(level_star(p).level);
  const auto d = delta_vector(p);
  CHECK(d.delta == std::vector<std::int64_t>{1, 28, 32, 2});
  CHECK_FALSE(is_unimodal(d));
  CHECK(single_peaked(d.delta));
}
