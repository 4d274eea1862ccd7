#include "edgepoly/criteria.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace edgepoly {

namespace {

constexpr int kMaxCriterionBits = 22;

// Visits the nonempty subsets of [size] (as 1-based member lists) in
// (size, lexicographic) order until visit returns true.
bool any_subset(int size, const std::function<bool(const std::vector<int>&)>& visit) {
  if (size > kMaxCriterionBits)
    fail(ErrorCode::InstanceTooLarge, "subset scans are limited to 22 elements");
  std::vector<int> pick;
  for (int k = 1; k <= size; ++k) {
    pick.resize(k);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      if (visit(pick)) return true;
      int j = k - 1;
      while (j >= 0 && pick[j] == size - k + j + 1) --j;
      if (j < 0) break;
      ++pick[j];
      for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return false;
}

// Shared form of both criteria: ground set [size] with bounds c, "top" the
// aggregate bound (S for K_{m,n}, a for Veronese type), and eligible(i)
// restricting condition (i) to a subset of the ground set.
CriterionVerdict subset_criterion(int size, std::span<const Coord> c, Coord top,
                                  const std::function<bool(int)>& eligible) {
  const Coord total = std::accumulate(c.begin(), c.begin() + size, Coord{0});
  CriterionVerdict verdict{true, std::nullopt};
  any_subset(size, [&](const std::vector<int>& x) {
    Coord sum = 0;
    bool in_eligible = true;
    for (int i : x) {
      sum += c[i - 1];
      in_eligible = in_eligible && eligible(i);
    }
    const Coord k = static_cast<Coord>(x.size());
    if (in_eligible && top < sum && sum < top - size + 2 * k - 1) {
      verdict = {false, SubsetViolation{1, x}};
      return true;
    }
    if (total - sum < top && top <= 2 * k + total - sum - size) {
      verdict = {false, SubsetViolation{2, x}};
      return true;
    }
    return false;
  });
  return verdict;
}

}  // namespace

Coord BipartiteSpec::heavy_sum() const {
  return std::accumulate(c.begin(), c.begin() + m, Coord{0});
}

Coord BipartiteSpec::light_sum() const {
  return std::accumulate(c.begin() + m, c.end(), Coord{0});
}

std::vector<int> BipartiteSpec::saturated() const {
  std::vector<int> out;
  const Coord s = light_sum();
  for (int i = 1; i <= m; ++i)
    if (c[i - 1] == s) out.push_back(i);
  return out;
}

std::vector<int> BipartiteSpec::unsaturated() const {
  std::vector<int> out;
  const Coord s = light_sum();
  for (int i = 1; i <= m; ++i)
    if (c[i - 1] != s) out.push_back(i);
  return out;
}

BipartiteSpec make_bipartite_spec(int m, int n, BoundVector c) {
  if (m < 1 || n < 1) fail(ErrorCode::InvalidParameters, "K_{m,n} needs m, n >= 1");
  if (static_cast<int>(c.size()) != m + n)
    fail(ErrorCode::InvalidParameters, "bound vector must have m + n entries");
  if (std::any_of(c.begin(), c.end(), [](Coord x) { return x < 1; }))
    fail(ErrorCode::InvalidParameters, "bounds must be positive");
  BipartiteSpec spec{m, n, std::move(c)};
  const Coord s = spec.light_sum();
  if (spec.heavy_sum() <= s)
    fail(ErrorCode::HypothesisViolated, "the first side must have the strictly larger bound sum");
  for (int i = 0; i < m; ++i)
    if (spec.c[i] > s)
      fail(ErrorCode::HypothesisViolated,
           "c_" + std::to_string(i + 1) + " exceeds the opposite side sum " + std::to_string(s));
  return spec;
}

std::optional<BipartiteSpec> normalize_bipartite(int m, int n, const BoundVector& c) {
  if (static_cast<int>(c.size()) != m + n)
    fail(ErrorCode::InvalidParameters, "bound vector must have m + n entries");
  const Coord first = std::accumulate(c.begin(), c.begin() + m, Coord{0});
  const Coord second = std::accumulate(c.begin() + m, c.end(), Coord{0});
  if (first == second) return std::nullopt;
  if (first > second) return make_bipartite_spec(m, n, c);
  BoundVector swapped(c.begin() + m, c.end());
  swapped.insert(swapped.end(), c.begin(), c.begin() + m);
  return make_bipartite_spec(n, m, std::move(swapped));
}

bool bipartite_interior_nonempty(const BipartiteSpec& spec) {
  for (int i : spec.unsaturated())
    if (spec.c[i - 1] < 2) return false;
  for (int j = spec.m; j < spec.m + spec.n; ++j)
    if (spec.c[j] < 2) return false;
  return spec.light_sum() >= spec.m + 1;
}

CriterionVerdict bipartite_level_criterion(const BipartiteSpec& spec) {
  if (!bipartite_interior_nonempty(spec))
    fail(ErrorCode::HypothesisViolated,
         "the level* criterion needs S >= m + 1 and c_i >= 2 off the saturated vertices");
  const Coord s = spec.light_sum();
  return subset_criterion(spec.m, spec.c, s, [&](int i) { return spec.c[i - 1] != s; });
}

CriterionVerdict veronese_level_criterion(const VeroneseSpec& spec) {
  validate(spec);
  return subset_criterion(spec.dim(), spec.c, spec.a, [](int) { return true; });
}

bool veronese_uniform_formula(int n, Coord c, Coord a) {
  if (n < 1 || c < 2 || a <= c || a < n + 1 || a >= n * c)
    fail(ErrorCode::InvalidParameters, "uniform parameters need a > c >= 2, a >= n + 1, a < nc");
  auto inside = [a](Coord lo, Coord hi) { return lo <= a && a <= hi; };
  for (Coord k = 1; k <= n; ++k) {
    if (inside(k * c + n - 2 * k + 2, k * c - 1)) return false;
    if (inside((n - k) * c + 1, 2 * k + (n - k) * c - n)) return false;
  }
  return true;
}

bool tree_labeling_pseudo_gorenstein(const Graph& t) { return !leaf_distance_two_exists(t); }

bool bipartite_labeling_classification(int m, int n) {
  if (m < 1 || n < 1) fail(ErrorCode::InvalidParameters, "K_{m,n} needs m, n >= 1");
  if (m < n) std::swap(m, n);
  return m <= 2 * n - 1;
}

ContainmentResult dilation_containment(const Graph& g, const BoundVector& c, Coord dilation,
                                       std::uint64_t node_cap) {
  if (dilation < 1) fail(ErrorCode::InvalidParameters, "dilation must be positive");
  BoundVector scaled(c);
  for (auto& x : scaled) x *= dilation;
  const auto base = enumerate_bases(g, c);
  const auto p = facets(base);
  const auto q = facets(enumerate_bases(g, scaled));

  ContainmentResult result{true, false};
  // N * conv(D(G,c)) is the hull of the N-fold bases and their divisors, so
  // checking the scaled bases suffices.
  Point scaled_basis(g.order());
  for (const auto& a : base.bases) {
    for (int i = 0; i < g.order(); ++i) scaled_basis[i] = dilation * a[i];
    if (!contains(q, scaled_basis, 1, Region::Full)) result.holds = false;
  }
  for (const auto& x : lattice_points(q, 1, Region::Full, node_cap)) {
    if (!contains(p, x, dilation, Region::Full)) {
      result.strict = true;
      break;
    }
  }
  return result;
}

std::optional<BoundVector> search_labeling(const Graph& g, Coord c_max, std::uint64_t node_cap) {
  if (c_max < 1) fail(ErrorCode::InvalidParameters, "cmax must be positive");
  const int n = g.order();
  BoundVector c(n, 1);
  while (true) {
    if (pseudo_gorenstein_star(facets(enumerate_bases(g, c)), node_cap)) return c;
    int k = n - 1;
    while (k >= 0 && c[k] == c_max) c[k--] = 1;
    if (k < 0) return std::nullopt;
    ++c[k];
  }
}

}  // namespace edgepoly
