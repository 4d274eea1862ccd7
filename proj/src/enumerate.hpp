#pragma once

// Pruned recursive descent over the integer points of a 0/1-normal system
//   lo <= x_i <= cap_i,  sum_{i in A} x_i <= limit_A.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "edgepoly/facets.hpp"
#include "edgepoly/lattice.hpp"

namespace edgepoly::detail {

struct Constraint {
  Subset subset;
  Coord limit;
};

class BoxedSystem {
 public:
  BoxedSystem(const HPolytope& p, Coord dilation, Region region)
      : dim_(p.dim()), lo_(region == Region::Interior ? 1 : 0),
        cap_(p.dim(), std::numeric_limits<Coord>::max()) {
    const Coord strict = region == Region::Interior ? 1 : 0;
    for (const auto& f : p.upper()) constraints_.push_back({f.subset, dilation * f.bound - strict});
    build_index();
  }

  /// Additional componentwise caps x_i <= cap[i].
  void cap_by(const Point& cap) {
    for (int i = 0; i < dim_; ++i) cap_[i] = std::min(cap_[i], cap[i]);
  }

  int dim() const { return dim_; }

  template <class Visit>
  void for_each(std::uint64_t node_cap, Visit&& visit) const {
    State st{Point(dim_, 0), std::vector<Coord>(constraints_.size(), 0), 0, node_cap, false};
    descend(0, st, visit);
  }

  std::uint64_t count(std::uint64_t node_cap) const {
    State st{Point(dim_, 0), std::vector<Coord>(constraints_.size(), 0), 0, node_cap, false};
    std::uint64_t total = 0;
    count_descend(0, st, total);
    return total;
  }

 private:
  struct State {
    Point x;
    std::vector<Coord> partial;
    std::uint64_t nodes;
    std::uint64_t node_cap;
    bool stop;
  };

  void build_index() {
    on_coord_.assign(dim_, {});
    for (std::size_t f = 0; f < constraints_.size(); ++f) {
      for (int i = 0; i < dim_; ++i) {
        if (!(constraints_[f].subset >> i & 1u)) continue;
        const Subset after = constraints_[f].subset & ~((Subset{2} << i) - 1);
        on_coord_[i].push_back({f, static_cast<Coord>(__builtin_popcount(after))});
      }
    }
  }

  Coord upper(int i, const State& st) const {
    Coord ub = cap_[i];
    for (const auto& [f, rest] : on_coord_[i])
      ub = std::min(ub, constraints_[f].limit - st.partial[f] - lo_ * rest);
    return ub;
  }

  void tick(State& st) const {
    if (++st.nodes > st.node_cap)
      fail(ErrorCode::EnumerationBudgetExceeded,
           "visited more than " + std::to_string(st.node_cap) + " enumeration nodes");
  }

  template <class Visit>
  void descend(int i, State& st, Visit& visit) const {
    if (i == dim_) {
      if (!visit(static_cast<const Point&>(st.x))) st.stop = true;
      return;
    }
    const Coord ub = upper(i, st);
    for (Coord v = lo_; v <= ub && !st.stop; ++v) {
      tick(st);
      st.x[i] = v;
      for (const auto& [f, rest] : on_coord_[i]) st.partial[f] += v;
      descend(i + 1, st, visit);
      for (const auto& [f, rest] : on_coord_[i]) st.partial[f] -= v;
    }
    st.x[i] = 0;
  }

  void count_descend(int i, State& st, std::uint64_t& total) const {
    const Coord ub = upper(i, st);
    if (ub < lo_) return;
    if (i + 1 == dim_) {
      tick(st);
      const auto add = static_cast<std::uint64_t>(ub - lo_ + 1);
      if (total > std::numeric_limits<std::uint64_t>::max() - add)
        fail(ErrorCode::ArithmeticOverflow, "lattice point count overflows 64 bits");
      total += add;
      return;
    }
    for (Coord v = lo_; v <= ub; ++v) {
      tick(st);
      for (const auto& [f, rest] : on_coord_[i]) st.partial[f] += v;
      count_descend(i + 1, st, total);
      for (const auto& [f, rest] : on_coord_[i]) st.partial[f] -= v;
    }
  }

  int dim_;
  Coord lo_;
  Point cap_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::pair<std::size_t, Coord>>> on_coord_;
};

/// Decides whether some integer u satisfies lo <= u <= hi and
/// low_A <= sum_{i in A} u_i <= high_A for every upper inequality A of P.
/// Exhaustive depth-first search with interval pruning; values are tried
/// outward from `target`.
class SplitSearch {
 public:
  explicit SplitSearch(const HPolytope& p) : dim_(p.dim()) {
    for (const auto& f : p.upper()) subsets_.push_back(f.subset);
    on_coord_.assign(dim_, {});
    for (std::size_t f = 0; f < subsets_.size(); ++f)
      for (int i = 0; i < dim_; ++i)
        if (subsets_[f] >> i & 1u) on_coord_[i].push_back(f);
    const std::size_t m = subsets_.size();
    min_rest_.assign((dim_ + 1) * m, 0);
    max_rest_.assign((dim_ + 1) * m, 0);
    partial_.assign(m, 0);
  }

  bool feasible(const Point& lo, const Point& hi, const std::vector<Coord>& low,
                const std::vector<Coord>& high, const Point& target) {
    const std::size_t m = subsets_.size();
    for (int i = 0; i < dim_; ++i)
      if (lo[i] > hi[i]) return false;
    for (int i = dim_ - 1; i >= 0; --i) {
      for (std::size_t f = 0; f < m; ++f) {
        min_rest_[i * m + f] = min_rest_[(i + 1) * m + f];
        max_rest_[i * m + f] = max_rest_[(i + 1) * m + f];
      }
      for (std::size_t f : on_coord_[i]) {
        min_rest_[i * m + f] += lo[i];
        max_rest_[i * m + f] += hi[i];
      }
    }
    for (std::size_t f = 0; f < m; ++f) {
      if (min_rest_[f] > high[f] || max_rest_[f] < low[f]) return false;
      partial_[f] = 0;
    }
    lo_ = &lo;
    hi_ = &hi;
    low_ = &low;
    high_ = &high;
    target_ = &target;
    return descend(0);
  }

 private:
  bool descend(int i) {
    if (i == dim_) return true;
    const std::size_t m = subsets_.size();
    Coord vl = (*lo_)[i];
    Coord vh = (*hi_)[i];
    for (std::size_t f : on_coord_[i]) {
      const std::size_t next = (i + 1) * m + f;
      vh = std::min(vh, (*high_)[f] - partial_[f] - min_rest_[next]);
      vl = std::max(vl, (*low_)[f] - partial_[f] - max_rest_[next]);
    }
    if (vl > vh) return false;
    const Coord start = std::clamp((*target_)[i], vl, vh);
    for (Coord d = 0; start + d <= vh || start - d >= vl; ++d) {
      if (start + d <= vh && try_value(i, start + d)) return true;
      if (d > 0 && start - d >= vl && try_value(i, start - d)) return true;
    }
    return false;
  }

  bool try_value(int i, Coord v) {
    for (std::size_t f : on_coord_[i]) partial_[f] += v;
    const bool ok = descend(i + 1);
    for (std::size_t f : on_coord_[i]) partial_[f] -= v;
    return ok;
  }

  int dim_;
  std::vector<Subset> subsets_;
  std::vector<std::vector<std::size_t>> on_coord_;
  std::vector<Coord> min_rest_;
  std::vector<Coord> max_rest_;
  std::vector<Coord> partial_;
  const Point* lo_ = nullptr;
  const Point* hi_ = nullptr;
  const std::vector<Coord>* low_ = nullptr;
  const std::vector<Coord>* high_ = nullptr;
  const Point* target_ = nullptr;
};

/// Whether a = u + w with u in int(rP) (or rP) and w in sP, all integral.
class Splitter {
 public:
  Splitter(const HPolytope& p, Coord r, Region first, Coord s)
      : p_(p), r_(r), s_(s), strict_(first == Region::Interior ? 1 : 0), search_(p),
        lo_(p.dim()), hi_(p.dim()), target_(p.dim()), low_(p.upper().size()),
        high_(p.upper().size()) {
    for (int i = 0; i < p.dim(); ++i) bound_.push_back(p.coordinate_bound(i));
    for (std::size_t f = 0; f < p.upper().size(); ++f) high_[f] = r * p.upper()[f].bound - strict_;
  }

  bool splits(const Point& a) {
    const int n = p_.dim();
    for (int i = 0; i < n; ++i) {
      const Coord cb = bound_[i];
      lo_[i] = std::max(strict_, a[i] - s_ * cb);
      hi_[i] = std::min(a[i], r_ * cb - strict_);
      target_[i] = a[i] * r_ / (r_ + s_);
    }
    for (std::size_t f = 0; f < p_.upper().size(); ++f) {
      Coord sum = 0;
      const Subset sub = p_.upper()[f].subset;
      for (int i = 0; i < n; ++i)
        if (sub >> i & 1u) sum += a[i];
      low_[f] = sum - s_ * p_.upper()[f].bound;
    }
    return search_.feasible(lo_, hi_, low_, high_, target_);
  }

 private:
  const HPolytope& p_;
  Coord r_;
  Coord s_;
  Coord strict_;
  SplitSearch search_;
  Point bound_;
  Point lo_;
  Point hi_;
  Point target_;
  std::vector<Coord> low_;
  std::vector<Coord> high_;
};

}  // namespace edgepoly::detail
