#include "edgepoly/levelness.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "enumerate.hpp"

namespace edgepoly {

namespace {

struct PointHash {
  std::size_t operator()(const Point& x) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Coord v : x) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::string format_point(const Point& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << ")";
  return os.str();
}

// a - b when it is componentwise nonnegative.
bool subtract(const Point& a, const Point& b, Point& out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] - b[i];
    if (out[i] < 0) return false;
  }
  return true;
}

// Some a0 in `interior` leaves a - a0 inside (N-1)P.
bool splits_off_interior(const HPolytope& p, const std::vector<Point>& interior, const Point& a,
                         Coord level, Point& scratch) {
  for (const auto& a0 : interior)
    if (subtract(a, a0, scratch) && contains(p, scratch, level - 1, Region::Full)) return true;
  return false;
}

// Few interior points: try each; otherwise search for a0 directly.
constexpr std::size_t kDirectSplitLimit = 16;

struct BlockData {
  Subset block;
  HPolytope polytope;
  std::vector<Point> interior;
};

std::vector<BlockData> split_blocks(const HPolytope& p, std::uint64_t node_cap) {
  std::vector<BlockData> out;
  for (Subset b : coordinate_blocks(p)) {
    auto q = restrict_to_block(p, b);
    auto interior = lattice_points(q, 1, Region::Interior, node_cap);
    out.push_back({b, std::move(q), std::move(interior)});
  }
  return out;
}

void scatter(const Point& local, Subset block, Point& full) {
  std::size_t k = 0;
  for (int i : subset_members(block)) full[i - 1] = local[k++];
}

struct BlockDegrees {
  Coord degree = 0;
  Coord scanned = 0;
  std::set<Coord> realized;
};

BlockDegrees block_degrees(const HPolytope& p, Coord scan, std::uint64_t node_cap,
                           ReducedDegreeTable* table) {
  BlockDegrees out;
  out.scanned = scan;
  const auto unit = lattice_points(p, 1, Region::Full, node_cap);
  std::unordered_map<Point, Coord, PointHash> previous;
  Point diff(p.dim());
  for (Coord level = 1; level <= scan; ++level) {
    std::unordered_map<Point, Coord, PointHash> current;
    detail::BoxedSystem(p, level, Region::Interior).for_each(node_cap, [&](const Point& a) {
      Coord r = level;
      for (const auto& u : unit) {
        if (r == 1) break;
        if (!subtract(a, u, diff)) continue;
        if (auto it = previous.find(diff); it != previous.end()) r = std::min(r, it->second);
      }
      current.emplace(a, r);
      out.realized.insert(r);
      out.degree = std::max(out.degree, r);
      if (table) table->emplace(std::pair{level, a}, r);
      return true;
    });
    previous = std::move(current);
  }
  return out;
}

}  // namespace

bool pseudo_gorenstein_star(const HPolytope& p, std::uint64_t node_cap) {
  std::uint64_t found = 0;
  detail::BoxedSystem(p, 1, Region::Interior).for_each(node_cap, [&](const Point&) {
    return ++found < 2;
  });
  return found == 1;
}

Coord reduced_degree(const HPolytope& p, std::span<const Coord> a, Coord dilation,
                     std::uint64_t node_cap) {
  if (dilation < 1) fail(ErrorCode::InvalidParameters, "dilation must be positive");
  if (!contains(p, a, dilation, Region::Interior))
    fail(ErrorCode::NotAnInteriorPoint, "point is not interior to the dilation");
  const Point target(a.begin(), a.end());
  Point rest(p.dim());
  for (Coord r = 1; r < dilation; ++r) {
    detail::BoxedSystem inner(p, r, Region::Interior);
    inner.cap_by(target);
    bool found = false;
    inner.for_each(node_cap, [&](const Point& a0) {
      found = subtract(target, a0, rest) && contains(p, rest, dilation - r, Region::Full);
      return !found;
    });
    if (found) return r;
  }
  return dilation;
}

LevelVerdict level_star(const HPolytope& p, std::optional<Coord> max_level,
                        std::uint64_t node_cap) {
  if (max_level && *max_level < 2) fail(ErrorCode::InvalidParameters, "scan bound must be at least 2");
  LevelVerdict verdict;
  verdict.interior_count = count_lattice_points(p, 1, Region::Interior, node_cap);
  if (verdict.interior_count == 0) {
    verdict.scan_bound = 1;
    return verdict;
  }
  const auto blocks = split_blocks(p, node_cap);
  std::vector<Coord> bounds;
  for (const auto& b : blocks)
    bounds.push_back(max_level.value_or(std::max<Coord>(2, b.polytope.dim() - 1)));
  const Coord top = *std::max_element(bounds.begin(), bounds.end());
  verdict.scan_bound = top;

  for (Coord level = 2; level <= top; ++level) {
    // Lexicographically least failing point per block at this level.
    std::vector<std::optional<Point>> failing(blocks.size());
    bool any = false;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (level > bounds[k]) continue;
      const auto& b = blocks[k];
      detail::Splitter splitter(b.polytope, 1, Region::Interior, level - 1);
      Point scratch(b.polytope.dim());
      const bool direct = b.interior.size() <= kDirectSplitLimit;
      detail::BoxedSystem(b.polytope, level, Region::Interior).for_each(node_cap, [&](const Point& a) {
        if (direct ? splits_off_interior(b.polytope, b.interior, a, level, scratch)
                   : splitter.splits(a))
          return true;
        failing[k] = a;
        return false;
      });
      any = any || failing[k].has_value();
    }
    if (!any) continue;

    // The least failing point of the product: the failing block takes its
    // least failing point, every other block its least interior point.
    std::vector<Point> least_interior;
    for (const auto& b : blocks) {
      Point first;
      detail::BoxedSystem(b.polytope, level, Region::Interior).for_each(node_cap, [&](const Point& a) {
        first = a;
        return false;
      });
      least_interior.push_back(std::move(first));
    }
    std::optional<Point> best;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (!failing[k]) continue;
      Point full(p.dim());
      for (std::size_t j = 0; j < blocks.size(); ++j)
        scatter(j == k ? *failing[k] : least_interior[j], blocks[j].block, full);
      if (!best || full < *best) best = std::move(full);
    }
    verdict.witness = LevelWitness{
        level, *best,
        "no interior lattice point a0 of P leaves " + format_point(*best) + " - a0 inside " +
            std::to_string(level - 1) + "P"};
    return verdict;
  }
  verdict.level = true;
  return verdict;
}

IntStarAnalysis int_star_analysis(const HPolytope& p, std::optional<Coord> max_level,
                                  std::uint64_t node_cap) {
  if (max_level && *max_level < 1) fail(ErrorCode::InvalidParameters, "scan bound must be positive");
  IntStarAnalysis out;
  const auto blocks = split_blocks(p, node_cap);
  const bool factor = std::all_of(blocks.begin(), blocks.end(),
                                  [](const BlockData& b) { return !b.interior.empty(); });
  if (factor) {
    // With an interior point in every block, degree-1 points exist in every
    // block at every level, so the product realises exactly the union of the
    // block degrees and its int* degree is their maximum.
    for (const auto& b : blocks) {
      const Coord scan = max_level.value_or(std::max<Coord>(1, b.polytope.dim() - 1));
      auto d = block_degrees(b.polytope, scan, node_cap, nullptr);
      out.degree = std::max(out.degree, d.degree);
      out.scan_bound = std::max(out.scan_bound, scan);
      out.realized.insert(d.realized.begin(), d.realized.end());
    }
  } else {
    const Coord scan = max_level.value_or(std::max<Coord>(1, p.dim() - 1));
    auto d = block_degrees(p, scan, node_cap, nullptr);
    out.degree = d.degree;
    out.scan_bound = scan;
    out.realized = std::move(d.realized);
  }
  if (out.realized.empty())
    fail(ErrorCode::EmptyInterior, "no interior lattice point in any dilation up to " +
                                       std::to_string(out.scan_bound));
  return out;
}

bool conjecture_spectrum(const IntStarAnalysis& analysis) {
  for (Coord i = 1; i < analysis.degree; ++i)
    if (!analysis.realized.contains(i)) return false;
  return true;
}

ReducedDegreeTable reduced_degree_table(const HPolytope& p, Coord max_level,
                                        std::uint64_t node_cap) {
  if (max_level < 1) fail(ErrorCode::InvalidParameters, "scan bound must be positive");
  ReducedDegreeTable table;
  block_degrees(p, max_level, node_cap, &table);
  return table;
}

LevelnessReport analyze_levelness(const HPolytope& p, const LevelnessOptions& options) {
  LevelnessReport report;
  const auto verdict = level_star(p, options.max_level, options.node_cap);
  report.interior_count = verdict.interior_count;
  report.pseudo_gorenstein = verdict.interior_count == 1;
  report.level = verdict.level;
  report.witness = verdict.witness;
  report.scan_bound = verdict.scan_bound;
  if (report.pseudo_gorenstein)
    report.reflexive_up_to_translation = reflexive_up_to_translation(p, options.node_cap);
  try {
    auto analysis = int_star_analysis(p, options.max_level, options.node_cap);
    report.int_star_degree = analysis.degree;
    report.conjecture_spectrum_holds = conjecture_spectrum(analysis);
    report.realized_degrees = std::move(analysis.realized);
    report.scan_bound = std::max(report.scan_bound, analysis.scan_bound);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EmptyInterior) throw;
  }
  if (options.with_table)
    report.reduced_degree_table =
        reduced_degree_table(p, std::max<Coord>(1, report.scan_bound), options.node_cap);
  return report;
}

}  // namespace edgepoly
