#include "edgepoly/oracle.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <numeric>
#include <optional>

namespace edgepoly::oracle {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RationalPoint = std::vector<Rational>;

constexpr std::uint64_t kBruteBoxCap = 10'000'000;

// Inequality row: sum normal_i x_i <= rhs.
struct Row {
  std::vector<int> normal;
  Coord rhs;
};

std::vector<Row> rows_of(const HPolytope& p) {
  std::vector<Row> rows;
  for (int i = 0; i < p.dim(); ++i) {
    std::vector<int> normal(p.dim(), 0);
    normal[i] = -1;
    rows.push_back({std::move(normal), 0});
  }
  for (const auto& f : p.upper()) {
    std::vector<int> normal(p.dim(), 0);
    for (int i = 0; i < p.dim(); ++i) normal[i] = (f.subset >> i) & 1u;
    rows.push_back({std::move(normal), f.bound});
  }
  return rows;
}

// Rank of a rational matrix (rows x cols) by elimination.
int matrix_rank(std::vector<RationalPoint> m) {
  int rank = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
    int pivot = rank;
    while (pivot < static_cast<int>(m.size()) && m[pivot][col] == 0) ++pivot;
    if (pivot == static_cast<int>(m.size())) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[rank][col];
      for (int k = col; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

Rational determinant(std::vector<RationalPoint> m) {
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      const Rational factor = m[r][col] / m[col][col];
      for (int k = col; k < n; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  return det;
}

// Unique solution of the square system picked by `chosen`, if any.
std::optional<RationalPoint> solve(const std::vector<Row>& rows, const std::vector<int>& chosen,
                                   int n) {
  std::vector<RationalPoint> m;
  for (int r : chosen) {
    RationalPoint line;
    for (int v : rows[r].normal) line.emplace_back(v);
    line.emplace_back(rows[r].rhs);
    m.push_back(std::move(line));
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (int k = col; k <= n; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  RationalPoint x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

Rational evaluate(const Row& row, const RationalPoint& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (row.normal[i] != 0) s += row.normal[i] * x[i];
  return s;
}

int affine_dimension(const std::vector<RationalPoint>& verts, const std::vector<int>& face) {
  if (face.size() <= 1) return face.empty() ? -1 : 0;
  std::vector<RationalPoint> diffs;
  for (std::size_t k = 1; k < face.size(); ++k) {
    RationalPoint d(verts[0].size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = verts[face[k]][i] - verts[face[0]][i];
    diffs.push_back(std::move(d));
  }
  return matrix_rank(std::move(diffs));
}

// Cone triangulation: apex = first vertex of the face, coned over every facet
// of the face that misses the apex.
void triangulate(const std::vector<RationalPoint>& verts, const std::vector<Row>& rows,
                 const std::vector<std::vector<char>>& tight, const std::vector<int>& face,
                 int dim, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (dim == 0) {
    prefix.push_back(face[0]);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  const int apex = face[0];
  std::set<std::vector<int>> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (tight[apex][r]) continue;
    std::vector<int> sub;
    for (int v : face)
      if (tight[v][r]) sub.push_back(v);
    if (sub.empty() || !seen.insert(sub).second) continue;
    if (affine_dimension(verts, sub) != dim - 1) continue;
    prefix.push_back(apex);
    triangulate(verts, rows, tight, sub, dim - 1, prefix, out);
    prefix.pop_back();
  }
}

Coord box_bound(const HPolytope& p, int i) {
  Coord best = -1;
  for (const auto& f : p.upper())
    if ((f.subset >> i) & 1u) best = best < 0 ? f.bound : std::min(best, f.bound);
  return best;
}

bool satisfies(const HPolytope& p, const Point& x, Coord dilation, bool interior) {
  const Coord strict = interior ? 1 : 0;
  for (Coord v : x)
    if (v < strict) return false;
  for (const auto& f : p.upper()) {
    Coord s = 0;
    for (int i = 0; i < p.dim(); ++i)
      if ((f.subset >> i) & 1u) s += x[i];
    if (s > dilation * f.bound - strict) return false;
  }
  return true;
}

std::vector<Point> flat_points(const HPolytope& p, Coord dilation, bool interior) {
  const int n = p.dim();
  Point hi(n);
  double volume = 1;
  for (int i = 0; i < n; ++i) {
    hi[i] = dilation * box_bound(p, i);
    volume *= static_cast<double>(hi[i] + 1);
  }
  if (volume > 5e7) fail(ErrorCode::EnumerationBudgetExceeded, "flat enumeration box too large");
  std::vector<Point> out;
  Point x(n, 0);
  while (true) {
    if (satisfies(p, x, dilation, interior)) out.push_back(x);
    int k = n - 1;
    while (k >= 0 && x[k] == hi[k]) x[k--] = 0;
    if (k < 0) break;
    ++x[k];
  }
  return out;
}

}  // namespace

BruteBases brute_bases(const Graph& g, const BoundVector& c) {
  double box = 1;
  for (Coord ci : c) box *= static_cast<double>(ci + 1);
  if (box > static_cast<double>(kBruteBoxCap))
    fail(ErrorCode::InstanceTooLarge, "brute-force box exceeds 10^7");
  const auto& edges = g.edges();
  std::vector<Coord> degree(g.order(), 0);
  BruteBases out;
  std::uint64_t visited = 0;
  std::function<void(std::size_t, Coord)> walk = [&](std::size_t k, Coord total) {
    if (++visited > 100'000'000)
      fail(ErrorCode::EnumerationBudgetExceeded, "brute-force edge weights");
    if (k == edges.size()) {
      if (total > out.delta) {
        out.delta = total;
        out.bases.clear();
      }
      if (total == out.delta) out.bases.insert(degree);
      return;
    }
    const int u = edges[k].u - 1;
    const int v = edges[k].v - 1;
    for (Coord w = 0; degree[u] + w <= c[u] && degree[v] + w <= c[v]; ++w) {
      degree[u] += w;
      degree[v] += w;
      walk(k + 1, total + w);
      degree[u] -= w;
      degree[v] -= w;
    }
  };
  walk(0, 0);
  return out;
}

NormalizedVolume brute_volume(const HPolytope& p) {
  const int n = p.dim();
  if (n > 4) fail(ErrorCode::DimensionTooLarge, "brute volume is limited to n <= 4");
  const auto rows = rows_of(p);
  const int m = static_cast<int>(rows.size());

  std::vector<RationalPoint> verts;
  std::vector<int> chosen(n);
  std::function<void(int, int)> pick = [&](int start, int depth) {
    if (depth == n) {
      auto x = solve(rows, chosen, n);
      if (!x) return;
      for (const auto& row : rows)
        if (evaluate(row, *x) > row.rhs) return;
      if (std::find(verts.begin(), verts.end(), *x) == verts.end()) verts.push_back(*x);
      return;
    }
    for (int r = start; r < m; ++r) {
      chosen[depth] = r;
      pick(r + 1, depth + 1);
    }
  };
  pick(0, 0);
  std::sort(verts.begin(), verts.end());

  std::vector<std::vector<char>> tight(verts.size(), std::vector<char>(m, 0));
  for (std::size_t v = 0; v < verts.size(); ++v)
    for (int r = 0; r < m; ++r) tight[v][r] = evaluate(rows[r], verts[v]) == rows[r].rhs;

  std::vector<int> all(verts.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> simplices;
  std::vector<int> prefix;
  triangulate(verts, rows, tight, all, n, prefix, simplices);

  Rational total = 0;
  for (const auto& s : simplices) {
    std::vector<RationalPoint> m2;
    for (std::size_t k = 1; k < s.size(); ++k) {
      RationalPoint d(n);
      for (int i = 0; i < n; ++i) d[i] = verts[s[k]][i] - verts[s[0]][i];
      m2.push_back(std::move(d));
    }
    total += abs(determinant(std::move(m2)));
  }
  return {static_cast<std::int64_t>(numerator(total)),
          static_cast<std::int64_t>(denominator(total))};
}

bool brute_level_star(const HPolytope& p, Coord max_level) {
  const auto interior = flat_points(p, 1, true);
  if (interior.empty()) return false;
  bool level = true;
  for (Coord n = 2; n <= max_level; ++n) {
    for (const auto& a : flat_points(p, n, true)) {
      bool splits = false;
      for (const auto& a0 : interior) {
        Point rest(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) rest[i] = a[i] - a0[i];
        if (satisfies(p, rest, n - 1, false)) splits = true;
      }
      if (!splits) level = false;
    }
  }
  return level;
}

}  // namespace edgepoly::oracle
