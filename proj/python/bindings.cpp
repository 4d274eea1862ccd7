#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edgepoly/acceptance.hpp"
#include "edgepoly/criteria.hpp"

namespace py = pybind11;
using namespace edgepoly;

namespace {

using FacetList = std::vector<std::pair<std::vector<int>, Coord>>;

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  for (auto [u, v] : edges) es.push_back({u, v});
  return Graph(n, std::move(es));
}

HPolytope make_polytope(int dim, const FacetList& facets) {
  std::vector<Facet> upper;
  for (const auto& [members, bound] : facets) upper.push_back({subset_from_members(members), bound});
  return HPolytope(dim, std::move(upper));
}

FacetList facet_list(const HPolytope& p) {
  FacetList out;
  for (const auto& f : p.upper()) out.emplace_back(subset_members(f.subset), f.bound);
  return out;
}

py::object witness_dict(const std::optional<LevelWitness>& w) {
  if (!w) return py::none();
  py::dict d;
  d["level"] = w->level;
  d["point"] = w->point;
  d["explanation"] = w->explanation;
  return d;
}

py::dict verdict_dict(const CriterionVerdict& v) {
  py::dict d;
  d["level"] = v.level;
  if (v.violation) {
    py::dict viol;
    viol["condition"] = v.violation->condition;
    viol["subset"] = v.violation->subset;
    d["violation"] = viol;
  } else {
    d["violation"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bounded powers of edge ideals: polymatroid facets, lattice points, levelness";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::exception<Error>(m, "EdgepolyError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = error_type.get_stored();
      py::object instance = type(e.what());
      instance.attr("code") = to_string(e.code());
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("is_tree", &Graph::is_tree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  m.def("path", &family::path);
  m.def("cycle", &family::cycle);
  m.def("complete", &family::complete);
  m.def("complete_bipartite", &family::complete_bipartite);
  m.def("star", &family::star);
  m.def("trees", &trees_up_to_isomorphism, py::arg("n"));
  m.def("leaf_distance_two_exists", &leaf_distance_two_exists);

  py::class_<HPolytope>(m, "Polytope")
      .def(py::init(&make_polytope), py::arg("dim"), py::arg("facets"))
      .def_property_readonly("dim", &HPolytope::dim)
      .def_property_readonly("facets", &facet_list)
      .def("__eq__", [](const HPolytope& a, const HPolytope& b) { return a == b; })
      .def("__repr__", [](const HPolytope& p) { return to_string(p); })
      .def(
          "lattice_points",
          [](const HPolytope& p, Coord n, bool interior) {
            return lattice_points(p, n, interior ? Region::Interior : Region::Full);
          },
          py::arg("dilation") = 1, py::arg("interior") = false)
      .def(
          "count",
          [](const HPolytope& p, Coord n, bool interior) {
            return count_lattice_points(p, n, interior ? Region::Interior : Region::Full);
          },
          py::arg("dilation") = 1, py::arg("interior") = false)
      .def(
          "contains",
          [](const HPolytope& p, const Point& x, Coord n, bool interior) {
            return contains(p, x, n, interior ? Region::Interior : Region::Full);
          },
          py::arg("point"), py::arg("dilation") = 1, py::arg("interior") = false)
      .def("delta_vector", [](const HPolytope& p) { return delta_vector(p).delta; })
      .def("is_normal",
           [](const HPolytope& p, Coord max_level) { return normality_check(p, max_level).normal; },
           py::arg("max_level") = 3)
      .def("pseudo_gorenstein", [](const HPolytope& p) { return pseudo_gorenstein_star(p); })
      .def("reflexive_up_to_translation",
           [](const HPolytope& p) { return reflexive_up_to_translation(p); })
      .def(
          "level_star",
          [](const HPolytope& p, std::optional<Coord> max_level) {
            const auto v = level_star(p, max_level);
            py::dict d;
            d["level"] = v.level;
            d["witness"] = witness_dict(v.witness);
            d["scan_bound"] = v.scan_bound;
            d["interior_count"] = v.interior_count;
            return d;
          },
          py::arg("max_level") = py::none())
      .def(
          "int_star_degree",
          [](const HPolytope& p, std::optional<Coord> max_level) {
            return int_star_degree(p, max_level);
          },
          py::arg("max_level") = py::none())
      .def(
          "reduced_degree",
          [](const HPolytope& p, const Point& a, Coord n) { return reduced_degree(p, a, n); },
          py::arg("point"), py::arg("dilation"));

  m.def("delta_c", [](const Graph& g, const BoundVector& c) { return delta_c(g, c); });
  m.def("bases", [](const Graph& g, const BoundVector& c) { return enumerate_bases(g, c).bases; });
  m.def("polytope", [](const Graph& g, const BoundVector& c) {
    return facets(enumerate_bases(g, c));
  });
  m.def("veronese_polytope", [](Coord a, const BoundVector& c) {
    return veronese_polytope({a, c});
  });

  m.def("veronese_level_criterion",
        [](Coord a, const BoundVector& c) { return verdict_dict(veronese_level_criterion({a, c})); });
  m.def("bipartite_level_criterion", [](int m_, int n, const BoundVector& c) {
    return verdict_dict(bipartite_level_criterion(make_bipartite_spec(m_, n, c)));
  });
  m.def("veronese_uniform_formula", &veronese_uniform_formula, py::arg("n"), py::arg("c"),
        py::arg("a"));
  m.def("tree_labeling_pseudo_gorenstein", &tree_labeling_pseudo_gorenstein);
  m.def("bipartite_labeling_classification", &bipartite_labeling_classification);
  m.def(
      "search_labeling",
      [](const Graph& g, Coord c_max) { return search_labeling(g, c_max); }, py::arg("graph"),
      py::arg("c_max"));

  m.def("run_reproduction_suite", []() {
    py::list out;
    for (const auto& o : run_reproduction_suite()) {
      py::dict d;
      d["id"] = o.id;
      d["title"] = o.title;
      d["passed"] = o.passed;
      d["detail"] = o.detail;
      d["seconds"] = o.seconds;
      out.append(d);
    }
    return out;
  });
}
