"""Bounded powers of edge ideals: polymatroid facets, lattice points and levelness."""

from ._core import (
    EdgepolyError,
    Graph,
    Polytope,
    bases,
    bipartite_labeling_classification,
    bipartite_level_criterion,
    complete,
    complete_bipartite,
    cycle,
    delta_c,
    leaf_distance_two_exists,
    path,
    polytope,
    run_reproduction_suite,
    search_labeling,
    star,
    tree_labeling_pseudo_gorenstein,
    trees,
    veronese_level_criterion,
    veronese_polytope,
    veronese_uniform_formula,
)

__all__ = [
    "EdgepolyError",
    "Graph",
    "Polytope",
    "bases",
    "bipartite_labeling_classification",
    "bipartite_level_criterion",
    "complete",
    "complete_bipartite",
    "cycle",
    "delta_c",
    "leaf_distance_two_exists",
    "path",
    "polytope",
    "run_reproduction_suite",
    "search_labeling",
    "star",
    "tree_labeling_pseudo_gorenstein",
    "trees",
    "veronese_level_criterion",
    "veronese_polytope",
    "veronese_uniform_formula",
]
__version__ = "0.1.0"
