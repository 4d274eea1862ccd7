#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "edgepoly/acceptance.hpp"
#include "edgepoly/criteria.hpp"

using edgepoly::BoundVector;
using edgepoly::Coord;
using edgepoly::Graph;
using edgepoly::HPolytope;
using edgepoly::Point;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kBudget = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph_file;
  std::vector<Coord> c;
  std::vector<Coord> veronese;
  std::uint64_t budget = edgepoly::kDefaultNodeCap;
  std::optional<Coord> max_level;
  bool strict = false;
  bool human = false;
};

struct Instance {
  std::optional<Graph> graph;
  BoundVector c;
  std::optional<edgepoly::BasisSet> basis;
  HPolytope polytope;
};

Graph read_graph(const std::string& path, BoundVector& c, bool c_given) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
    const int n = doc.at("n").get<int>();
    std::vector<edgepoly::Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edges must be [i, j] pairs");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    if (!c_given) {
      if (!doc.contains("c")) throw InputError("no bound vector: supply \"c\" or --c");
      c = doc.at("c").get<BoundVector>();
    }
    return Graph(n, std::move(edges));
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

edgepoly::VeroneseSpec parse_veronese(const std::vector<Coord>& v) {
  if (v.size() < 2) throw InputError("--veronese expects a,c1,...,cn");
  return {v[0], BoundVector(v.begin() + 1, v.end())};
}

Instance load(const Options& o) {
  if (!o.veronese.empty()) {
    if (!o.graph_file.empty()) throw InputError("give either a graph file or --veronese");
    return {std::nullopt, {}, std::nullopt, edgepoly::veronese_polytope(parse_veronese(o.veronese))};
  }
  if (o.graph_file.empty()) throw InputError("a graph file is required");
  BoundVector c = o.c;
  Graph g = read_graph(o.graph_file, c, !o.c.empty());
  edgepoly::validate_bounds(g, c);
  auto basis = edgepoly::enumerate_bases(g, c, o.budget);
  auto p = edgepoly::facets(basis);
  return {std::move(g), std::move(c), std::move(basis), std::move(p)};
}

json facets_json(const HPolytope& p) {
  json out = json::array();
  for (const auto& f : p.upper())
    out.push_back({{"subset", edgepoly::subset_members(f.subset)}, {"bound", f.bound}});
  return out;
}

json witness_json(const std::optional<edgepoly::LevelWitness>& w) {
  if (!w) return nullptr;
  return {{"level", w->level}, {"point", w->point}, {"explanation", w->explanation}};
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json violation_json(const std::optional<edgepoly::SubsetViolation>& v) {
  if (!v) return nullptr;
  return {{"condition", v->condition}, {"subset", v->subset}};
}

void print_table(const json& doc, const std::string& indent = "") {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      std::cout << indent << key << ":\n";
      print_table(value, indent + "  ");
    } else {
      std::cout << indent << key << ": " << value.dump() << "\n";
    }
  }
}

int emit(const json& doc, const Options& o, bool negative = false) {
  if (o.human)
    print_table(doc);
  else
    std::cout << doc.dump(2) << "\n";
  return o.strict && negative ? kNegative : kOk;
}

int cmd_analyze(const Options& o) {
  const auto inst = load(o);
  edgepoly::LevelnessOptions lo;
  lo.max_level = o.max_level;
  lo.node_cap = o.budget;
  const auto report = edgepoly::analyze_levelness(inst.polytope, lo);
  const auto dv = edgepoly::delta_vector(inst.polytope, o.budget);
  json doc = {
      {"delta_c", inst.basis ? json(inst.basis->delta_c) : json(nullptr)},
      {"num_bases", inst.basis ? json(inst.basis->bases.size()) : json(nullptr)},
      {"facets", facets_json(inst.polytope)},
      {"interior_points_n1", report.interior_count},
      {"pseudo_gorenstein", report.pseudo_gorenstein},
      {"level", report.level},
      {"int_star_degree", optional_json(report.int_star_degree)},
      {"reflexive_up_to_translation", optional_json(report.reflexive_up_to_translation)},
      {"delta_vector", dv.delta},
      {"unimodal", edgepoly::is_unimodal(dv)},
      {"witness", witness_json(report.witness)},
      {"scan_bound_used", report.scan_bound},
  };
  return emit(doc, o, !report.level);
}

int cmd_facets(const Options& o) {
  const auto inst = load(o);
  return emit({{"dim", inst.polytope.dim()}, {"facets", facets_json(inst.polytope)}}, o);
}

int cmd_delta(const Options& o) {
  const auto inst = load(o);
  const auto dv = edgepoly::delta_vector(inst.polytope, o.budget);
  return emit({{"delta_vector", dv.delta},
               {"ehrhart_counts", dv.counts},
               {"interior_points_n1", dv.interior_count},
               {"unimodal", edgepoly::is_unimodal(dv)}},
              o);
}

int cmd_level(const Options& o) {
  const auto inst = load(o);
  const auto v = edgepoly::level_star(inst.polytope, o.max_level, o.budget);
  return emit({{"level", v.level},
               {"witness", witness_json(v.witness)},
               {"interior_points_n1", v.interior_count},
               {"scan_bound_used", v.scan_bound}},
              o, !v.level);
}

int cmd_psg(const Options& o) {
  const auto inst = load(o);
  const auto k = edgepoly::count_lattice_points(inst.polytope, 1, edgepoly::Region::Interior,
                                                o.budget);
  json refl = nullptr;
  if (k == 1) refl = edgepoly::reflexive_up_to_translation(inst.polytope, o.budget);
  return emit({{"pseudo_gorenstein", k == 1},
               {"interior_points_n1", k},
               {"reflexive_up_to_translation", refl}},
              o, k != 1);
}

int cmd_int_star(const Options& o) {
  const auto inst = load(o);
  const auto a = edgepoly::int_star_analysis(inst.polytope, o.max_level, o.budget);
  return emit({{"int_star_degree", a.degree},
               {"realized_degrees", a.realized},
               {"conjecture_spectrum", edgepoly::conjecture_spectrum(a)},
               {"scan_bound_used", a.scan_bound}},
              o);
}

int cmd_reduced(const Options& o, const std::vector<Coord>& point, Coord level) {
  const auto inst = load(o);
  if (static_cast<int>(point.size()) != inst.polytope.dim())
    throw InputError("--point has the wrong length");
  const Coord r = edgepoly::reduced_degree(inst.polytope, point, level, o.budget);
  return emit({{"point", point}, {"level", level}, {"reduced_degree", r}}, o);
}

int cmd_veronese(const Options& o, Coord a, const BoundVector& c, bool formula) {
  const edgepoly::VeroneseSpec spec{a, c};
  const auto verdict = edgepoly::veronese_level_criterion(spec);
  const auto p = edgepoly::veronese_polytope(spec);
  json doc = {{"a", a},
              {"c", c},
              {"facets", facets_json(p)},
              {"level", verdict.level},
              {"violation", violation_json(verdict.violation)},
              {"int_star_degree", edgepoly::int_star_degree(p, o.max_level, o.budget)}};
  if (formula) {
    const bool uniform = std::all_of(c.begin(), c.end(), [&](Coord x) { return x == c[0]; });
    doc["uniform_formula"] =
        uniform ? json(edgepoly::veronese_uniform_formula(static_cast<int>(c.size()), c[0], a))
                : json(nullptr);
  }
  return emit(doc, o, !verdict.level);
}

int cmd_bipartite(const Options& o, int m, int n, const BoundVector& c) {
  if (static_cast<int>(c.size()) != m + n) throw InputError("--c needs m + n entries");
  json doc = {{"m", m},
              {"n", n},
              {"c", c},
              {"labeling_pseudo_gorenstein", edgepoly::bipartite_labeling_classification(m, n)}};
  const auto spec = edgepoly::normalize_bipartite(m, n, c);
  bool level = false;
  if (!spec) {
    // Equal side sums: the polytope is the box 0 <= x <= c.
    const auto p = edgepoly::facets(edgepoly::enumerate_bases(
        edgepoly::family::complete_bipartite(m, n), c, o.budget));
    level = edgepoly::level_star(p, o.max_level, o.budget).level;
    doc["equal_sides"] = true;
    doc["interior_nonempty"] =
        edgepoly::count_lattice_points(p, 1, edgepoly::Region::Interior, o.budget) > 0;
    doc["violation"] = nullptr;
  } else {
    doc["equal_sides"] = false;
    doc["heavy_side_first"] = spec->c;
    doc["interior_nonempty"] = edgepoly::bipartite_interior_nonempty(*spec);
    if (edgepoly::bipartite_interior_nonempty(*spec)) {
      const auto verdict = edgepoly::bipartite_level_criterion(*spec);
      level = verdict.level;
      doc["violation"] = violation_json(verdict.violation);
    } else {
      doc["violation"] = nullptr;
    }
  }
  doc["level"] = level;
  return emit(doc, o, !level);
}

json search_json(const Graph& g, Coord c_max, std::uint64_t budget) {
  const auto w = edgepoly::search_labeling(g, c_max, budget);
  return {{"c_max", c_max}, {"witness", optional_json(w)}};
}

Graph graph_only(const Options& o) {
  if (o.graph_file.empty()) throw InputError("a graph file is required");
  BoundVector unused;
  return read_graph(o.graph_file, unused, true);
}

int cmd_tree_check(const Options& o, std::optional<Coord> search) {
  const Graph t = graph_only(o);
  const bool rule = edgepoly::tree_labeling_pseudo_gorenstein(t);
  json doc = {{"leaf_distance_two", !rule}, {"labeling_pseudo_gorenstein", rule}};
  if (search) doc["search"] = search_json(t, *search, o.budget);
  return emit(doc, o, !rule);
}

int cmd_search(const Options& o, Coord c_max) {
  const Graph g = graph_only(o);
  json doc = search_json(g, c_max, o.budget);
  return emit(doc, o, doc["witness"].is_null());
}

int cmd_sweep(const Options& o, int n, Coord c_max) {
  if (n < 1 || c_max < 2) throw InputError("--n must be positive and --cmax at least 2");
  json instances = json::array();
  std::set<Coord> degrees;
  BoundVector c(n, c_max);
  while (true) {
    Coord sum = 0;
    for (Coord x : c) sum += x;
    for (Coord a = std::max<Coord>(c[0] + 1, n + 1); a < sum; ++a) {
      const edgepoly::VeroneseSpec spec{a, c};
      const auto p = edgepoly::veronese_polytope(spec);
      const Coord d = edgepoly::int_star_degree(p, o.max_level, o.budget);
      degrees.insert(d);
      instances.push_back({{"a", a},
                           {"c", c},
                           {"level", edgepoly::veronese_level_criterion(spec).level},
                           {"int_star_degree", d}});
    }
    int k = n - 1;
    while (k >= 0 && c[k] == 2) --k;
    if (k < 0) break;
    --c[k];
    for (int j = k + 1; j < n; ++j) c[j] = c[k];
  }
  return emit({{"n", n},
               {"c_max", c_max},
               {"instances", instances},
               {"int_star_degrees_found", degrees}},
              o);
}

int cmd_verify(const Options& o, const std::string& suite) {
  if (suite != "paper") throw InputError("unknown suite '" + suite + "'");
  int failed = 0;
  edgepoly::run_reproduction_suite(
      [&](const edgepoly::CriterionOutcome& r) {
        std::cout << edgepoly::format_outcome(r) << std::endl;
        failed += !r.passed;
      },
      o.budget);
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failed ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded powers of edge ideals: facets, lattice points and levelness"};
  app.require_subcommand(1);
  Options o;

  auto polytope_input = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph_file, "graph JSON file {n, edges, c}");
    sub->add_option("--c", o.c, "bound vector (overrides the file)")->delimiter(',');
    sub->add_option("--veronese", o.veronese, "use Q(a; c) given as a,c1,...,cn")->delimiter(',');
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "enumeration cap (nodes / candidates)")
        ->capture_default_str();
    sub->add_option("--max-level", o.max_level, "override the dilation scan bound");
    sub->add_flag("--strict", o.strict, "exit 1 on a negative verdict");
    sub->add_flag("--human", o.human, "print a plain table instead of JSON");
  };

  auto* analyze = app.add_subcommand("analyze", "full levelness report");
  auto* facets = app.add_subcommand("facets", "facet system");
  auto* delta = app.add_subcommand("delta-vector", "Ehrhart delta-vector");
  auto* level = app.add_subcommand("level", "level* verdict with witness");
  auto* psg = app.add_subcommand("psg", "pseudo-Gorenstein* verdict");
  auto* int_star = app.add_subcommand("int-star-degree", "int* degree and realised degrees");
  auto* reduced = app.add_subcommand("reduced-degree", "reduced degree of one point");
  for (auto* sub : {analyze, facets, delta, level, psg, int_star, reduced}) {
    polytope_input(sub);
    common(sub);
  }
  std::vector<Coord> point;
  Coord point_level = 1;
  reduced->add_option("--point", point, "p1,...,pn")->delimiter(',')->required();
  reduced->add_option("--level", point_level, "dilation N")->required();

  auto* veronese = app.add_subcommand("veronese", "level* criterion for Q(a; c)");
  common(veronese);
  Coord a = 0;
  BoundVector vc;
  bool formula = false;
  veronese->add_option("--a", a)->required();
  veronese->add_option("--c", vc)->delimiter(',')->required();
  veronese->add_flag("--formula", formula, "also evaluate the uniform closed form");

  auto* bipartite = app.add_subcommand("bipartite", "level* criterion for K_{m,n}");
  common(bipartite);
  int bm = 0;
  int bn = 0;
  BoundVector bc;
  bipartite->add_option("--m", bm)->required();
  bipartite->add_option("--n", bn)->required();
  bipartite->add_option("--c", bc)->delimiter(',')->required();

  auto* tree = app.add_subcommand("tree-check", "leaf-distance rule for trees");
  common(tree);
  tree->add_option("graph", o.graph_file)->required();
  std::optional<Coord> tree_search;
  tree->add_option("--search", tree_search, "also search labelings up to this bound");

  auto* search = app.add_subcommand("search-labeling", "first pseudo-Gorenstein* labeling");
  common(search);
  search->add_option("graph", o.graph_file)->required();
  Coord c_max = 2;
  search->add_option("--cmax", c_max)->required();

  auto* sweep = app.add_subcommand("sweep-veronese", "int* degrees of all Q(a; c), c_i <= K");
  common(sweep);
  int sweep_n = 0;
  Coord sweep_c = 0;
  sweep->add_option("--n", sweep_n)->required();
  sweep->add_option("--cmax", sweep_c)->required();

  auto* verify = app.add_subcommand("verify", "run a reproduction suite");
  common(verify);
  std::string suite;
  verify->add_option("--suite", suite)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*facets) return cmd_facets(o);
    if (*delta) return cmd_delta(o);
    if (*level) return cmd_level(o);
    if (*psg) return cmd_psg(o);
    if (*int_star) return cmd_int_star(o);
    if (*reduced) return cmd_reduced(o, point, point_level);
    if (*veronese) return cmd_veronese(o, a, vc, formula);
    if (*bipartite) return cmd_bipartite(o, bm, bn, bc);
    if (*tree) return cmd_tree_check(o, tree_search);
    if (*search) return cmd_search(o, c_max);
    if (*sweep) return cmd_sweep(o, sweep_n, sweep_c);
    if (*verify) return cmd_verify(o, suite);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const edgepoly::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_budget() ? kBudget : kInput;
  }
  return kInput;
}
