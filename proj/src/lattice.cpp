#include "edgepoly/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "enumerate.hpp"

namespace edgepoly {

namespace {

void check_dilation(Coord n, Coord minimum) {
  if (n < minimum)
    fail(ErrorCode::InvalidParameters, "dilation must be at least " + std::to_string(minimum));
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::ArithmeticOverflow, "delta-vector sum");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::ArithmeticOverflow, "delta-vector term");
  return r;
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

std::vector<Point> lattice_points(const HPolytope& p, Coord dilation, Region region,
                                  std::uint64_t node_cap) {
  check_dilation(dilation, 1);
  std::vector<Point> out;
  detail::BoxedSystem(p, dilation, region).for_each(node_cap, [&](const Point& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

std::uint64_t count_lattice_points(const HPolytope& p, Coord dilation, Region region,
                                   std::uint64_t node_cap) {
  check_dilation(dilation, 0);
  if (dilation == 0) return region == Region::Full ? 1 : 0;
  return detail::BoxedSystem(p, dilation, region).count(node_cap);
}

bool contains(const HPolytope& p, std::span<const Coord> x, Coord dilation, Region region) {
  if (static_cast<int>(x.size()) != p.dim())
    fail(ErrorCode::InvalidParameters, "point dimension does not match the polytope");
  const Coord strict = region == Region::Interior ? 1 : 0;
  for (Coord xi : x)
    if (xi < strict) return false;
  for (const auto& f : p.upper()) {
    Coord s = 0;
    for (Subset rest = f.subset; rest != 0; rest &= rest - 1) s += x[__builtin_ctz(rest)];
    if (s > dilation * f.bound - strict) return false;
  }
  return true;
}

bool DeltaVector::consistent() const {
  if (delta.size() != static_cast<std::size_t>(dim + 1) || counts.size() != delta.size())
    return false;
  if (delta[0] != 1) return false;
  if (delta[1] != static_cast<std::int64_t>(counts[1]) - (dim + 1)) return false;
  if (delta[dim] != static_cast<std::int64_t>(interior_count)) return false;
  return std::all_of(delta.begin(), delta.end(), [](std::int64_t d) { return d >= 0; });
}

DeltaVector delta_vector(const HPolytope& p, std::uint64_t node_cap) {
  const int n = p.dim();
  DeltaVector out;
  out.dim = n;
  for (int level = 0; level <= n; ++level)
    out.counts.push_back(count_lattice_points(p, level, Region::Full, node_cap));
  for (int k = 0; k <= n; ++k) {
    std::int64_t d = 0;
    for (int j = 0; j <= k; ++j) {
      const auto count = static_cast<std::int64_t>(out.counts[k - j]);
      const std::int64_t term = checked_mul(binomial(n + 1, j), count);
      d = checked_add(d, j % 2 == 0 ? term : -term);
    }
    out.delta.push_back(d);
  }
  out.interior_count = count_lattice_points(p, 1, Region::Interior, node_cap);
  return out;
}

bool is_unimodal(std::span<const std::int64_t> delta) {
  if (delta.empty()) return true;
  const std::size_t peak = (delta.size() - 1) / 2;
  for (std::size_t k = 0; k < peak; ++k)
    if (delta[k] > delta[k + 1]) return false;
  for (std::size_t k = peak; k + 1 < delta.size(); ++k)
    if (delta[k] < delta[k + 1]) return false;
  return true;
}

NormalityResult normality_check(const HPolytope& p, Coord max_level, std::uint64_t node_cap) {
  check_dilation(max_level, 2);
  const auto blocks = coordinate_blocks(p);
  if (blocks.size() > 1) {
    // A product is normal iff every factor is; a factor's counterexample
    // padded with zeros is one for the product.
    for (Subset block : blocks) {
      auto part = normality_check(restrict_to_block(p, block), max_level, node_cap);
      if (part.normal) continue;
      Point lifted(p.dim(), 0);
      const auto members = subset_members(block);
      for (std::size_t k = 0; k < members.size(); ++k) lifted[members[k] - 1] = part.counterexample[k];
      return {false, part.level, std::move(lifted)};
    }
    return {};
  }
  NormalityResult result;
  // Once level N-1 is confirmed, the (N-1)-fold sumset equals (N-1)P ∩ Z^n,
  // so x is a sum of N lattice points iff x = u + w with u ∈ P, w ∈ (N-1)P.
  for (Coord level = 2; level <= max_level && result.normal; ++level) {
    detail::Splitter splitter(p, 1, Region::Full, level - 1);
    detail::BoxedSystem(p, level, Region::Full).for_each(node_cap, [&](const Point& x) {
      if (splitter.splits(x)) return true;
      result = {false, level, x};
      return false;
    });
  }
  return result;
}

bool reflexive_up_to_translation(const HPolytope& p, std::uint64_t node_cap) {
  const auto interior = lattice_points(p, 1, Region::Interior, node_cap);
  if (interior.size() != 1)
    fail(ErrorCode::NotPseudoGorenstein,
         "expected exactly one interior lattice point, found " + std::to_string(interior.size()));
  const Point& centre = interior.front();
  if (std::any_of(centre.begin(), centre.end(), [](Coord x) { return x != 1; })) return false;
  for (const auto& f : p.upper())
    if (f.bound - subset_size(f.subset) != 1) return false;
  return true;
}

std::vector<Subset> coordinate_blocks(const HPolytope& p) {
  std::vector<Subset> blocks;
  for (const auto& f : p.upper()) {
    Subset merged = f.subset;
    std::vector<Subset> kept;
    for (Subset b : blocks) {
      if (b & merged)
        merged |= b;
      else
        kept.push_back(b);
    }
    kept.push_back(merged);
    blocks = std::move(kept);
  }
  std::sort(blocks.begin(), blocks.end(), [](Subset a, Subset b) {
    return __builtin_ctz(a) < __builtin_ctz(b);
  });
  return blocks;
}

HPolytope restrict_to_block(const HPolytope& p, Subset block) {
  const auto members = subset_members(block);
  std::vector<Facet> upper;
  for (const auto& f : p.upper()) {
    if ((f.subset & block) == 0) continue;
    if ((f.subset & ~block) != 0)
      fail(ErrorCode::InvalidParameters, "block splits an inequality");
    Subset local = 0;
    for (std::size_t k = 0; k < members.size(); ++k)
      if (f.subset >> (members[k] - 1) & 1u) local |= Subset{1} << k;
    upper.push_back({local, f.bound});
  }
  return HPolytope(static_cast<int>(members.size()), std::move(upper));
}

}  // namespace edgepoly
