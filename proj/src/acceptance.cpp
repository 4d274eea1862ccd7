#include "edgepoly/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "edgepoly/criteria.hpp"
#include "edgepoly/oracle.hpp"

namespace edgepoly {

namespace {

std::string show(std::span<const Coord> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Collects expectations; keeps the first few failure messages.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  int checks() const { return checks_; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    std::string s = std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed";
    for (const auto& m : messages_) s += "; " + m;
    return s;
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> messages_;
};

struct Registered {
  HPolytope polytope;
  std::optional<bool> level;
};

// Every polytope built along the way, keyed by its inequality system.
class Registry {
 public:
  void add(const HPolytope& p, std::optional<bool> level = std::nullopt) {
    auto [it, inserted] = items_.try_emplace(to_string(p), Registered{p, level});
    if (!inserted && level) it->second.level = level;
  }
  const std::map<std::string, Registered>& items() const { return items_; }

 private:
  std::map<std::string, Registered> items_;
};

struct Suite {
  std::uint64_t cap;
  Registry registry;

  HPolytope graph_polytope(const Graph& g, const BoundVector& c) {
    auto p = facets(enumerate_bases(g, c));
    registry.add(p);
    return p;
  }

  bool level_of(const HPolytope& p) {
    const bool level = level_star(p, std::nullopt, cap).level;
    registry.add(p, level);
    return level;
  }
};

std::string compact(const HPolytope& p) {
  std::string s;
  for (const auto& f : p.upper()) {
    std::string lhs;
    for (int i : subset_members(f.subset)) lhs += (lhs.empty() ? "x" : "+x") + std::to_string(i);
    s += (s.empty() ? "" : ", ") + lhs + "<=" + std::to_string(f.bound);
  }
  return "{" + s + "}";
}

Subset members(std::initializer_list<int> m) {
  return subset_from_members(std::vector<int>(m));
}

std::string criterion_path3(Suite& s) {
  Tally t;
  const auto p = s.graph_polytope(family::path(3), {2, 3, 2});
  const HPolytope expected(
      3, {{members({1}), 2}, {members({2}), 3}, {members({3}), 2}, {members({1, 3}), 3}});
  t.expect(p == expected, "facet system " + compact(p));
  t.expect(s.level_of(p), "level* is false");
  const Coord d = int_star_degree(p, std::nullopt, s.cap);
  t.expect(d == 1, "int* degree " + std::to_string(d));
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return "facets " + compact(p) + "; level*; int* degree 1";
}

std::string criterion_k34(Suite& s) {
  Tally t;
  const auto p = s.graph_polytope(family::complete_bipartite(3, 4), BoundVector(7, 2));
  const auto interior = lattice_points(p, 1, Region::Interior, s.cap);
  t.expect(interior == std::vector<Point>{Point(7, 1)}, "interior lattice points differ");
  t.expect(pseudo_gorenstein_star(p, s.cap), "not pseudo-Gorenstein*");
  t.expect(!reflexive_up_to_translation(p, s.cap), "reflexive up to translation");
  const auto verdict = level_star(p, std::nullopt, s.cap);
  s.registry.add(p, verdict.level);
  t.expect(!verdict.level, "level* holds");
  t.expect(verdict.witness && verdict.witness->level == 2, "witness not at N = 2");

  // With int(P) = {(1,...,1)}, a point of int(2P) splits only as 1 + (a - 1).
  const Point stated{3, 3, 3, 3, 3, 3, 2};
  const Point remainder{2, 2, 2, 2, 2, 2, 1};
  t.expect(contains(p, stated, 2, Region::Interior), "(3,3,3,3,3,3,2) not in int(2P)");
  t.expect(!contains(p, remainder, 1, Region::Full), "(2,2,2,2,2,2,1) lies in P");
  Coord heavy = 0;
  for (const auto& f : p.upper())
    if (f.subset == members({4, 5, 6, 7})) heavy = f.bound;
  t.expect(heavy == 6, "heavy-side bound " + std::to_string(heavy));
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  Point rest = verdict.witness->point;
  for (auto& x : rest) --x;
  return "int(P) = {(1,...,1)}; not reflexive; witness N=2 a=" + show(verdict.witness->point) +
         " (a - 1 = " + show(rest) + " not in P); (3,3,3,3,3,3,2) - 1 = (2,2,2,2,2,2,1) not in P;"
         " x4+x5+x6+x7 <= 6";
}

std::string criterion_triangle(Suite& s) {
  Tally t;
  const auto g = family::cycle(3);
  const auto p = s.graph_polytope(g, {1, 1, 1});
  t.expect(std::find(p.upper().begin(), p.upper().end(), Facet{members({1, 2, 3}), 2}) !=
               p.upper().end(),
           "x1+x2+x3 <= 2 missing");
  const auto containment = dilation_containment(g, {1, 1, 1}, 2, s.cap);
  t.expect(containment.holds && containment.strict, "containment not strict");
  const auto doubled = s.graph_polytope(g, {2, 2, 2});
  const HPolytope cube(3, {{members({1}), 2}, {members({2}), 2}, {members({3}), 2}});
  t.expect(doubled == cube, "conv(D(G,2c)) = " + compact(doubled));
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return "x1+x2+x3 <= 2; 2P strictly inside conv(D(G,2c)) = [0,2]^3";
}

std::string criterion_bipartite_labeling(Suite& s) {
  Tally t;
  int found = 0;
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= m; ++n) {
      const auto g = family::complete_bipartite(m, n);
      const auto w = search_labeling(g, 2, s.cap);
      const bool expected = m <= 2 * n - 1;
      const std::string name = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
      t.expect(w.has_value() == expected, name + " search disagrees");
      t.expect(bipartite_labeling_classification(m, n) == expected, name + " classification");
      if (w) {
        ++found;
        t.expect(*w == BoundVector(m + n, 2), name + " witness " + show(*w));
        s.graph_polytope(g, *w);
      }
    }
  }
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return "15 pairs, " + std::to_string(found) + " with witness (2,...,2), all others none";
}

std::string criterion_bipartite_cross(Suite& s) {
  std::vector<BipartiteSpec> eligible;
  for (int total = 2; total <= 7; ++total) {
    for (int m = 1; m < total; ++m) {
      const int n = total - m;
      BoundVector c(total, 1);
      while (true) {
        try {
          auto spec = make_bipartite_spec(m, n, c);
          bipartite_level_criterion(spec);
          eligible.push_back(std::move(spec));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::HypothesisViolated) throw;
        }
        int k = total - 1;
        while (k >= 0 && c[k] == 4) c[k--] = 1;
        if (k < 0) break;
        ++c[k];
      }
    }
  }
  std::mt19937 rng(20240101);
  std::shuffle(eligible.begin(), eligible.end(), rng);
  const std::size_t take = std::min<std::size_t>(eligible.size(), 240);
  Tally t;
  int level = 0;
  for (std::size_t k = 0; k < take; ++k) {
    const auto& spec = eligible[k];
    const auto verdict = bipartite_level_criterion(spec);
    const auto p = s.graph_polytope(family::complete_bipartite(spec.m, spec.n), spec.c);
    const bool direct = s.level_of(p);
    level += direct;
    t.expect(verdict.level == direct, "m=" + std::to_string(spec.m) + " n=" +
                                          std::to_string(spec.n) + " c=" + show(spec.c));
  }
  if (take < 200) t.expect(false, "only " + std::to_string(take) + " eligible specs");
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return std::to_string(take) + " of " + std::to_string(eligible.size()) +
         " eligible specs, 100% agreement (" + std::to_string(level) + " level*)";
}

std::vector<VeroneseSpec> veronese_specs(int max_n, Coord max_c) {
  std::vector<VeroneseSpec> out;
  for (int n = 1; n <= max_n; ++n) {
    BoundVector c(n, max_c);
    while (true) {
      Coord sum = 0;
      for (Coord x : c) sum += x;
      for (Coord a = std::max<Coord>(c[0] + 1, n + 1); a < sum; ++a) out.push_back({a, c});
      // next nonincreasing vector with entries in [2, max_c]
      int k = n - 1;
      while (k >= 0 && c[k] == 2) --k;
      if (k < 0) break;
      --c[k];
      for (int j = k + 1; j < n; ++j) c[j] = c[k];
    }
  }
  return out;
}

std::string criterion_veronese(Suite& s) {
  Tally t;
  int level = 0;
  const auto specs = veronese_specs(4, 4);
  for (const auto& spec : specs) {
    const bool criterion = veronese_level_criterion(spec).level;
    const bool direct = s.level_of(veronese_polytope(spec));
    const auto prism = star_prism(spec);
    s.registry.add(prism);
    const bool prism_level = s.level_of(prism);
    level += direct;
    const std::string name = "a=" + std::to_string(spec.a) + " c=" + show(spec.c);
    t.expect(criterion == direct, name + " criterion vs polytope");
    t.expect(direct == prism_level, name + " polytope vs prism");
  }
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return std::to_string(specs.size()) + " specs, 100% agreement (" + std::to_string(level) +
         " level*)";
}

// The n = 8, a = 9 scan alone visits about 10^9 nodes.
constexpr std::uint64_t kUniformNodeCap = 4'000'000'000;
constexpr std::uint64_t kMidpointScanPoints = 30'000'000;

std::string criterion_uniform(Suite& s) {
  Tally t;
  int direct_checked = 0;
  int formula_checked = 0;
  int midpoints = 0;
  int midpoints_direct = 0;
  for (int n = 3; n <= 8; ++n) {
    for (Coord a = n + 1; a < 2 * n; ++a) {
      const VeroneseSpec spec{a, BoundVector(n, 2)};
      const bool criterion = veronese_level_criterion(spec).level;
      const bool formula = veronese_uniform_formula(n, 2, a);
      const std::string name = "n=" + std::to_string(n) + " c=2 a=" + std::to_string(a);
      t.expect(criterion == (a == n + 1), name + " criterion");
      t.expect(formula == criterion, name + " formula vs criterion");
      const auto p = veronese_polytope(spec);
      const bool direct = level_star(p, std::nullopt, std::max(s.cap, kUniformNodeCap)).level;
      s.registry.add(p, direct);
      t.expect(direct == (a == n + 1), name + " direct level*");
      ++direct_checked;
    }
  }
  for (int n = 3; n <= 7; ++n) {
    for (Coord c = 2; c <= 5; ++c) {
      const Coord mid = n % 2 == 0 ? (n / 2) * c + 1 : ((n + 1) / 2) * c;
      if (mid <= c || mid >= n * c) continue;
      const VeroneseSpec spec{mid, BoundVector(n, c)};
      const std::string name = "n=" + std::to_string(n) + " c=" + std::to_string(c) +
                               " a=" + std::to_string(mid);
      t.expect(veronese_level_criterion(spec).level, name + " midpoint criterion");
      t.expect(veronese_uniform_formula(n, c, mid), name + " midpoint formula");
      // Scan directly only when the top dilation's interior is small enough.
      const auto p = veronese_polytope(spec);
      if (count_lattice_points(p, n - 1, Region::Interior, kUniformNodeCap * 4) <= kMidpointScanPoints) {
        const bool direct = level_star(p, std::nullopt, std::max(s.cap, kUniformNodeCap)).level;
        s.registry.add(p, direct);
        t.expect(direct, name + " midpoint direct");
        ++midpoints_direct;
      }
      ++midpoints;
    }
    for (Coord c = 2; c <= 5; ++c) {
      for (Coord a = std::max<Coord>(c + 1, n + 1); a < n * c; ++a) {
        const VeroneseSpec spec{a, BoundVector(n, c)};
        ++formula_checked;
        t.expect(veronese_uniform_formula(n, c, a) == veronese_level_criterion(spec).level,
                 "n=" + std::to_string(n) + " c=" + std::to_string(c) + " a=" +
                     std::to_string(a) + " formula vs criterion");
      }
    }
  }
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return "c=2: level* iff a=n+1 for n=3..8 (criterion, formula and direct scan of " +
         std::to_string(direct_checked) + " polytopes); midpoints level* for n=3..7, c=2..5 (" + std::to_string(midpoints) +
         " by criterion and formula, " + std::to_string(midpoints_direct) +
         " also by direct scan within budget); formula = criterion on " +
         std::to_string(formula_checked) + " uniform specs";
}

std::string criterion_no_level_a(Suite& s) {
  Tally t;
  const BoundVector c{3, 3, 2, 2, 2};
  for (Coord a = 6; a <= 11; ++a) {
    const VeroneseSpec spec{a, c};
    t.expect(!veronese_level_criterion(spec).level, "a=" + std::to_string(a) + " criterion");
    t.expect(!s.level_of(veronese_polytope(spec)), "a=" + std::to_string(a) + " direct");
  }
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return "c=(3,3,2,2,2): no a in 6..11 is level* (criterion and direct scan)";
}

std::string criterion_q6(Suite& s) {
  Tally t;
  const auto p = veronese_polytope({6, {5, 3, 3, 3}});
  s.registry.add(p, false);
  const Coord r2 = reduced_degree(p, Point{8, 1, 1, 1}, 2, s.cap);
  const Coord r3 = reduced_degree(p, Point{14, 1, 1, 1}, 3, s.cap);
  const auto analysis = int_star_analysis(p, std::nullopt, s.cap);
  t.expect(r2 == 2, "reduced degree of (8,1,1,1) is " + std::to_string(r2));
  t.expect(r3 == 3, "reduced degree of (14,1,1,1) is " + std::to_string(r3));
  t.expect(analysis.degree == 3, "int* degree " + std::to_string(analysis.degree));
  t.expect(conjecture_spectrum(analysis), "spectrum has gaps");
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return "reduced degrees 2 and 3; int* degree 3; degrees {1,2,3} realised";
}

std::string criterion_spectrum_family(Suite& s) {
  Tally t;
  for (int n = 3; n <= 5; ++n) {
    BoundVector c(n, 2);
    c[0] = n;
    const auto p = veronese_polytope({n + 1, c});
    s.registry.add(p);
    const auto analysis = int_star_analysis(p, std::nullopt, s.cap);
    t.expect(analysis.degree == n - 1, "n=" + std::to_string(n) + " int* degree " +
                                           std::to_string(analysis.degree));
    t.expect(conjecture_spectrum(analysis), "n=" + std::to_string(n) + " spectrum has gaps");
  }
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return "int* degree n-1 and full spectrum for n=3,4,5";
}

std::string criterion_trees(Suite& s) {
  Tally t;
  int trees = 0;
  int positive = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& tree : trees_up_to_isomorphism(n)) {
      ++trees;
      const bool rule = tree_labeling_pseudo_gorenstein(tree);
      const auto w = search_labeling(tree, 2, s.cap);
      positive += rule;
      std::string name = "tree n=" + std::to_string(n) + " edges";
      for (const auto& e : tree.edges()) name += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
      t.expect(rule == w.has_value(), name);
      if (w) s.graph_polytope(tree, *w);
    }
    t.expect(tree_labeling_pseudo_gorenstein(family::path(n)) == (n != 3),
             "path on " + std::to_string(n) + " vertices");
  }
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return std::to_string(trees) + " trees up to isomorphism (n<=7), rule = search on all, " +
         std::to_string(positive) + " labelable; P_n labelable iff n != 3";
}

struct SweepGraph {
  std::string name;
  Graph graph;
};

std::vector<SweepGraph> sweep_graphs() {
  std::vector<SweepGraph> out;
  for (int n = 2; n <= 6; ++n) out.push_back({"P" + std::to_string(n), family::path(n)});
  for (int n = 3; n <= 6; ++n) out.push_back({"C" + std::to_string(n), family::cycle(n)});
  for (int k = 2; k <= 5; ++k) out.push_back({"K1," + std::to_string(k), family::star(k)});
  for (int n = 3; n <= 6; ++n) out.push_back({"K" + std::to_string(n), family::complete(n)});
  for (int m = 2; m <= 3; ++m)
    for (int n = m; m + n <= 6; ++n)
      out.push_back({"K" + std::to_string(m) + "," + std::to_string(n),
                     family::complete_bipartite(m, n)});
  return out;
}

std::string criterion_oracle(Suite& s) {
  Tally t;
  std::mt19937 rng(7);
  int cases = 0;
  for (const auto& [name, g] : sweep_graphs()) {
    const int n = g.order();
    std::vector<BoundVector> bounds;
    BoundVector c(n, 1);
    while (true) {
      bounds.push_back(c);
      int k = n - 1;
      while (k >= 0 && c[k] == 3) c[k--] = 1;
      if (k < 0) break;
      ++c[k];
    }
    if (bounds.size() > 60) {
      std::shuffle(bounds.begin(), bounds.end(), rng);
      bounds.resize(60);
      std::sort(bounds.begin(), bounds.end());
    }
    for (const auto& b : bounds) {
      ++cases;
      const auto brute = oracle::brute_bases(g, b);
      const auto basis = enumerate_bases(g, b);
      const std::string where = name + " c=" + show(b);
      t.expect(basis.delta_c == brute.delta, where + " delta");
      t.expect(std::set<Point>(basis.bases.begin(), basis.bases.end()) == brute.bases,
               where + " bases");
      const auto p = facets(basis);
      t.expect(lattice_points(p, 1, Region::Full, s.cap) == divisor_set(basis),
               where + " H-representation points");
      if (n <= 4) s.registry.add(p);
    }
  }
  if (cases < 500) t.expect(false, "only " + std::to_string(cases) + " cases");
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return std::to_string(cases) + " (graph, c) cases, bases and H-representation points 100% agree";
}

// Index after which the sequence never rises again, if it never falls
// before it; nullopt when the sequence is not single-peaked.
std::optional<std::size_t> single_peak(const std::vector<std::int64_t>& d) {
  std::size_t k = 0;
  while (k + 1 < d.size() && d[k] <= d[k + 1]) ++k;
  const std::size_t peak = k;
  while (k + 1 < d.size() && d[k] >= d[k + 1]) ++k;
  if (k + 1 != d.size()) return std::nullopt;
  return peak;
}

std::string criterion_delta(Suite& s) {
  Tally t;
  const auto cube_p =
      HPolytope(4, {{members({1}), 2}, {members({2}), 2}, {members({3}), 2}, {members({4}), 2}});
  const auto cube = delta_vector(cube_p, s.cap);
  t.expect(cube.delta == std::vector<std::int64_t>{1, 76, 230, 76, 1},
           "cube delta " + show(std::vector<Coord>(cube.delta.begin(), cube.delta.end())));
  const auto cube_volume = oracle::brute_volume(cube_p);
  t.expect(cube_volume.numerator == 384 && cube_volume.denominator == 1, "cube volume");

  int volumes = 0;
  int level_count = 0;
  int single_peaked = 0;
  std::set<int> failing_dims;
  std::vector<std::pair<const HPolytope*, std::vector<std::int64_t>>> failing;
  for (const auto& [key, item] : s.registry.items()) {
    const auto& p = item.polytope;
    if (p.dim() > 5) continue;
    const auto d = delta_vector(p, s.cap);
    t.expect(d.consistent(), "inconsistent delta for " + compact(p));
    if (p.dim() <= 4) {
      std::int64_t sum = 0;
      for (auto v : d.delta) sum += v;
      const auto vol = oracle::brute_volume(p);
      ++volumes;
      t.expect(vol.denominator == 1 && vol.numerator == sum, "volume mismatch for " + compact(p));
    }
    const bool level = item.level ? *item.level : level_star(p, std::nullopt, s.cap).level;
    if (!level) continue;
    ++level_count;
    single_peaked += single_peak(d.delta).has_value();
    if (!is_unimodal(d)) {
      failing_dims.insert(p.dim());
      failing.emplace_back(&p, d.delta);
    }
  }
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  const std::string sanity = "cube [0,2]^4 -> (1,76,230,76,1); " + std::to_string(volumes) +
                             " volumes match sum(delta)";
  const std::string peaks = std::to_string(single_peaked) + " of " +
                            std::to_string(level_count) + " level* polytopes single-peaked";
  if (failing.empty()) return sanity + "; all " + std::to_string(level_count) +
                             " level* polytopes rise to floor(n/2) then fall; " + peaks;

  std::sort(failing.begin(), failing.end(), [](const auto& x, const auto& y) {
    return std::pair(x.first->dim(), x.first->upper().size()) <
           std::pair(y.first->dim(), y.first->upper().size());
  });
  std::string dims;
  for (int d : failing_dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
  const auto& [example, delta] = failing.front();
  throw std::runtime_error(
      std::to_string(failing.size()) + " of " + std::to_string(level_count) +
      " level* polytopes do not rise to floor(n/2) then fall (dimensions " + dims + "), e.g. " +
      compact(*example) + " delta=" + show(std::vector<Coord>(delta.begin(), delta.end())) +
      "; " + peaks + "; " + sanity);
}

std::string criterion_normality(Suite& s) {
  Tally t;
  for (const auto& [key, item] : s.registry.items()) {
    const auto r = normality_check(item.polytope, 3, s.cap);
    t.expect(r.normal, "not normal at N=" + std::to_string(r.level) + ": " + compact(item.polytope));
  }
  if (!t.ok()) throw std::runtime_error(t.summary(""));
  return std::to_string(s.registry.items().size()) + " polytopes normal up to N=3";
}

struct Entry {
  int id;
  const char* title;
  std::string (*run)(Suite&);
};

constexpr Entry kCriteria[] = {
    {1, "P_3, c=(2,3,2): facets, level*, int* degree", criterion_path3},
    {2, "K_{3,4}, c=2^7: pseudo-Gorenstein*, not reflexive, not level*", criterion_k34},
    {3, "triangle, c=(1,1,1): dilation containment", criterion_triangle},
    {4, "K_{m,n} labelings, m,n<=5", criterion_bipartite_labeling},
    {5, "bipartite criterion vs direct level*", criterion_bipartite_cross},
    {6, "Veronese criterion vs polytope vs star prism, n<=4, c_i<=4", criterion_veronese},
    {7, "uniform Veronese: c=2 and midpoint choices", criterion_uniform},
    {8, "c=(3,3,2,2,2): no level* a in 6..11", criterion_no_level_a},
    {9, "Q(6;(5,3,3,3)): reduced degrees and int* degree", criterion_q6},
    {10, "Q(n+1;(n,2,...,2)): int* degree n-1, n=3,4,5", criterion_spectrum_family},
    {11, "trees n<=7: leaf rule vs labeling search", criterion_trees},
    {12, "oracle equivalence of bases and lattice points", criterion_oracle},
    {13, "delta-vector sanity and volumes", criterion_delta},
    {14, "normality up to N=3", criterion_normality},
};

}  // namespace

std::vector<CriterionOutcome> run_reproduction_suite(
    const std::function<void(const CriterionOutcome&)>& on_result, std::uint64_t node_cap) {
  Suite suite{node_cap, {}};
  std::vector<CriterionOutcome> out;
  for (const auto& entry : kCriteria) {
    CriterionOutcome o{entry.id, entry.title, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      o.detail = entry.run(suite);
      o.passed = true;
    } catch (const std::exception& e) {
      o.detail = e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(o);
    out.push_back(std::move(o));
  }
  return out;
}

std::string format_outcome(const CriterionOutcome& o) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", o.seconds);
  return std::string(o.passed ? "PASS" : "FAIL") + "  " + std::to_string(o.id) + "  " + o.title +
         "  (" + time + ")  " + o.detail;
}

}  // namespace edgepoly
