import pytest

import edgepoly as ep


def test_path3_facets_and_levelness():
    g = ep.path(3)
    c = [2, 3, 2]
    assert ep.delta_c(g, c) == 3
    assert sorted(ep.bases(g, c)) == [[1, 3, 2], [2, 3, 1]]
    p = ep.polytope(g, c)
    assert p.facets == [([1], 2), ([2], 3), ([3], 2), ([1, 3], 3)]
    assert p.count() == 32
    assert p.level_star()["level"]
    assert p.int_star_degree() == 1
    assert p.delta_vector() == [1, 28, 32, 2]


def test_k34_witness():
    p = ep.polytope(ep.complete_bipartite(3, 4), [2] * 7)
    assert p.pseudo_gorenstein()
    assert not p.reflexive_up_to_translation()
    verdict = p.level_star()
    assert not verdict["level"]
    assert verdict["witness"]["level"] == 2
    assert verdict["witness"]["point"] == [1, 1, 1, 2, 3, 3, 3]


def test_polytope_roundtrip_and_membership():
    p = ep.Polytope(2, [([1], 2), ([2], 2), ([1, 2], 3)])
    assert p.contains([1, 1], interior=True)
    assert not p.contains([2, 2])
    assert p.lattice_points(interior=True) == [[1, 1]]
    assert p == ep.Polytope(2, p.facets)


def test_veronese_q6():
    p = ep.veronese_polytope(6, [5, 3, 3, 3])
    assert not ep.veronese_level_criterion(6, [5, 3, 3, 3])["level"]
    assert p.int_star_degree() == 3
    assert not p.level_star()["level"]


def test_uniform_formula_matches_criterion():
    for n in range(3, 6):
        for a in range(n + 1, 2 * n):
            assert ep.veronese_uniform_formula(n, 2, a) == ep.veronese_level_criterion(a, [2] * n)["level"]


def test_tree_rule():
    assert not ep.tree_labeling_pseudo_gorenstein(ep.path(3))
    assert ep.tree_labeling_pseudo_gorenstein(ep.path(4))
    assert ep.search_labeling(ep.path(4), 3) is not None
    assert len(ep.trees(6)) == 6


def test_errors_carry_codes():
    with pytest.raises(ep.EdgepolyError) as info:
        ep.Graph(3, [(1, 1)])
    assert info.value.code == "invalid-parameters"
    with pytest.raises(ValueError):
        ep.delta_c(ep.path(3), [0, 1, 1])
