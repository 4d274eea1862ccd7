#include "edgepoly/facets.hpp"

#include <algorithm>
#include <sstream>

namespace edgepoly {

std::vector<int> subset_members(Subset s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i + 1);
  return out;
}

Subset subset_from_members(std::span<const int> members) {
  Subset s = 0;
  for (int i : members) {
    if (i < 1 || i > 32) fail(ErrorCode::InvalidParameters, "subset member out of range");
    s |= Subset{1} << (i - 1);
  }
  return s;
}

bool subset_less(Subset a, Subset b) {
  if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
  return subset_members(a) < subset_members(b);
}

HPolytope::HPolytope(int dim, std::vector<Facet> upper) : dim_(dim), upper_(std::move(upper)) {
  if (dim < 1 || dim > kMaxPolytopeDim)
    fail(ErrorCode::DimensionTooLarge, "polytope dimension must lie in [1, 31]");
  const Subset all = (Subset{1} << dim) - 1;
  Subset covered = 0;
  for (const auto& f : upper_) {
    if (f.subset == 0 || (f.subset & ~all) != 0)
      fail(ErrorCode::InvalidParameters, "inequality support must be a nonempty subset of [n]");
    if (f.bound < 1) fail(ErrorCode::InvalidParameters, "inequality bounds must be positive");
    covered |= f.subset;
  }
  if (covered != all)
    fail(ErrorCode::InvalidParameters, "every coordinate needs an upper inequality");
  std::sort(upper_.begin(), upper_.end(), [](const Facet& x, const Facet& y) {
    if (x.subset != y.subset) return subset_less(x.subset, y.subset);
    return x.bound < y.bound;
  });
  upper_.erase(std::unique(upper_.begin(), upper_.end()), upper_.end());
}

Coord HPolytope::coordinate_bound(int i) const {
  Coord best = -1;
  for (const auto& f : upper_)
    if (f.subset >> i & 1u) best = best < 0 ? f.bound : std::min(best, f.bound);
  return best;
}

std::string to_string(const HPolytope& p) {
  std::ostringstream os;
  for (const auto& f : p.upper()) {
    bool first = true;
    for (int i : subset_members(f.subset)) {
      os << (first ? "" : " + ") << "x" << i;
      first = false;
    }
    os << " <= " << f.bound << "\n";
  }
  return os.str();
}

RankOracle::RankOracle(const BasisSet& basis) : dim_(basis.dim) {
  if (dim_ > kMaxFacetScanDim)
    fail(ErrorCode::DimensionTooLarge, "rank tables are limited to 16 coordinates");
  const std::size_t count = std::size_t{1} << dim_;
  rank_.assign(count, 0);
  std::vector<Coord> sums(count);
  for (const auto& a : basis.bases) {
    sums[0] = 0;
    for (std::size_t x = 1; x < count; ++x) {
      const int low = __builtin_ctzll(x);
      sums[x] = sums[x & (x - 1)] + a[low];
      rank_[x] = std::max(rank_[x], sums[x]);
    }
  }
}

Coord rank(const BasisSet& basis, Subset x) {
  Coord best = 0;
  for (const auto& a : basis.bases) {
    Coord s = 0;
    for (int i : subset_members(x)) s += a[i - 1];
    best = std::max(best, s);
  }
  return best;
}

bool is_closed(const RankOracle& rank, Subset a) {
  // Monotonicity reduces the superset test to one-element extensions.
  for (int j = 0; j < rank.dim(); ++j) {
    const Subset bit = Subset{1} << j;
    if (!(a & bit) && rank(a | bit) <= rank(a)) return false;
  }
  return true;
}

bool is_inseparable(const RankOracle& rank, Subset a) {
  if (subset_size(a) <= 1) return true;
  const Coord whole = rank(a);
  // Enumerate proper nonempty submasks containing the lowest element once.
  const Subset low = a & (~a + 1);
  for (Subset part = (a - 1) & a; part != 0; part = (part - 1) & a) {
    if (!(part & low)) continue;
    if (rank(part) + rank(a ^ part) == whole) return false;
  }
  return true;
}

HPolytope facets(const BasisSet& basis) {
  if (basis.bases.empty()) fail(ErrorCode::InvalidParameters, "basis set is empty");
  const RankOracle rank(basis);
  std::vector<Facet> upper;
  const Subset count = Subset{1} << basis.dim;
  for (Subset a = 1; a < count; ++a)
    if (is_closed(rank, a) && is_inseparable(rank, a)) upper.push_back({a, rank(a)});
  return HPolytope(basis.dim, std::move(upper));
}

void validate(const VeroneseSpec& spec) {
  const int n = spec.dim();
  auto bad = [](const std::string& why) { fail(ErrorCode::InvalidVeroneseParameters, why); };
  if (n < 1) bad("at least one coordinate is required");
  if (n > kMaxPolytopeDim) fail(ErrorCode::DimensionTooLarge, "too many coordinates");
  Coord sum = 0;
  for (int i = 0; i < n; ++i) {
    if (spec.c[i] < 2) bad("every c_i must be at least 2");
    if (i > 0 && spec.c[i] > spec.c[i - 1]) bad("c must be nonincreasing");
    sum += spec.c[i];
  }
  if (spec.a <= spec.c[0]) bad("a must exceed c_1");
  if (spec.a < n + 1) bad("a must be at least n + 1");
  if (spec.a >= sum) bad("a must be smaller than c_1 + ... + c_n");
}

HPolytope veronese_polytope(const VeroneseSpec& spec) {
  validate(spec);
  const int n = spec.dim();
  std::vector<Facet> upper;
  for (int i = 0; i < n; ++i) upper.push_back({Subset{1} << i, spec.c[i]});
  upper.push_back({(Subset{1} << n) - 1, spec.a});
  return HPolytope(n, std::move(upper));
}

HPolytope star_prism(const VeroneseSpec& spec) {
  validate(spec);
  BoundVector bounds{spec.a};
  bounds.insert(bounds.end(), spec.c.begin(), spec.c.end());
  return facets(enumerate_bases(family::star(spec.dim()), bounds));
}

HPolytope veronese_prism(const VeroneseSpec& spec) {
  validate(spec);
  const int n = spec.dim();
  std::vector<Facet> upper{{1u, spec.a}};
  for (int i = 0; i < n; ++i) upper.push_back({Subset{1} << (i + 1), spec.c[i]});
  upper.push_back({((Subset{1} << (n + 1)) - 1) & ~Subset{1}, spec.a});
  return HPolytope(n + 1, std::move(upper));
}

}  // namespace edgepoly
