"""
Brute-force oracles and the validators.
"""
import pytest

from rectpack.coloring import Coloring
from rectpack.errors import BudgetExceeded, MissingAssignment, UnknownId
from rectpack.geom import Instance
from rectpack.oracles import (
    OracleBudget,
    exact_chromatic,
    exact_clique_graph,
    exact_mwis,
    intersection_graph,
    validate_coloring,
    validate_independent,
)

from conftest import box


def test_exact_mwis_small_cases(disjoint3, cross_grid):
    assert exact_mwis(Instance([])) == (frozenset(), 0)

    weighted = Instance([box("a", 0, 1, 0, 1, 1), box("b", 2, 3, 0, 1, 2)])
    assert exact_mwis(weighted) == (frozenset({"a", "b"}), 3)

    clique = Instance([box(f"c{w}", -w, w, -w, w, w) for w in (1, 2, 3)])
    assert exact_mwis(clique) == (frozenset({"c3"}), 3)

    chosen, weight = exact_mwis(cross_grid)
    assert weight == 2
    assert chosen in ({"r0", "r1"}, {"r2", "r3"})


def test_exact_mwis_prefers_two_light_over_one_heavy():
    # b touches both a and c; a + c outweighs b
    inst = Instance([box("a", 0, 2, 0, 1, 3), box("b", 1, 4, 0, 1, 5), box("c", 3, 5, 0, 1, 3)])
    assert exact_mwis(inst) == (frozenset({"a", "c"}), 6)


def test_exact_mwis_respects_budget(disjoint3):
    with pytest.raises(BudgetExceeded):
        exact_mwis(disjoint3, OracleBudget(max_n=2))


def test_exact_chromatic(disjoint3, cross_grid, nested3):
    assert exact_chromatic(Instance([])) == 0
    assert exact_chromatic(disjoint3) == 1
    assert exact_chromatic(cross_grid) == 2
    assert exact_chromatic(nested3) == 3
    clique4 = Instance([box(f"c{w}", -w, w, -w, w) for w in (1, 2, 3, 4)])
    assert exact_chromatic(clique4) == 4
    pair_plus = Instance([box("wide", 0, 10, 2, 8), box("tall", 2, 8, 0, 10), box("far", 20, 21, 0, 1)])
    assert exact_chromatic(pair_plus) == 2
    with pytest.raises(BudgetExceeded):
        exact_chromatic(nested3, OracleBudget(max_n=1))


def test_exact_clique_graph(nested3, disjoint3):
    assert exact_clique_graph(Instance([])) == 0
    assert exact_clique_graph(nested3) == 3
    assert exact_clique_graph(disjoint3) == 1


def test_intersection_graph(cross_grid):
    graph = intersection_graph(cross_grid)
    assert graph.number_of_nodes() == 4
    assert graph.number_of_edges() == 4
    assert not graph.has_edge("r0", "r1")


def test_validate_coloring(cross_pair):
    assert validate_coloring(cross_pair, {"wide": 0, "tall": 1})
    verdict = validate_coloring(cross_pair, {"wide": 0, "tall": 0})
    assert not verdict
    assert set(verdict.pair) == {"wide", "tall"}
    coloring = Coloring({"wide": 1, "tall": 0}, 2, "manual")
    assert validate_coloring(cross_pair, coloring).ok


def test_validate_coloring_missing(cross_pair):
    with pytest.raises(MissingAssignment):
        validate_coloring(cross_pair, {"wide": 0})


def test_validate_independent(cross_pair):
    touching = Instance([box("a", 0, 2, 0, 2), box("b", 2, 4, 0, 2), box("c", 5, 6, 0, 1)])
    assert validate_independent(touching, [])
    assert validate_independent(touching, ["a", "c"])
    assert validate_independent(touching, ["a", "b"]).pair == ("a", "b")
    with pytest.raises(UnknownId):
        validate_independent(touching, ["zz"])
