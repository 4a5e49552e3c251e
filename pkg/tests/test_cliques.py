"""
Candidate points, clique number and the maximal clique family, checked
against the networkx graph oracles on small random families.
"""
from rectpack.cliques import (
    Point,
    candidate_points,
    clique_number,
    containing_set,
    max_depth,
    maximal_cliques,
)
from rectpack.geom import Instance
from rectpack.oracles import exact_clique_graph, graph_maximal_cliques

from conftest import box, random_instances


def test_candidate_points_single_rect():
    inst = Instance([box("a", 0, 1, 0, 1)])
    assert candidate_points(inst) == [Point(0, 1)]


def test_candidate_points_are_deduplicated():
    inst = Instance([box("a", 0, 1, 0, 1), box("b", 2, 3, 0, 1)])
    points = candidate_points(inst)
    assert len(points) == len(set(points)) == 2


def test_containing_set_closed_corner():
    inst = Instance([box("a", 0, 2, 0, 2), box("b", 2, 4, 2, 4), box("c", 5, 6, 5, 6)])
    assert {r.id for r in containing_set(inst, Point(2, 2))} == {"a", "b"}
    assert containing_set(inst, Point(10, 10)) == set()
    assert {r.id for r in containing_set(inst, Point(2, 2), within=["b", "c"])} == {"b"}


def test_clique_number_small_cases(nested3, disjoint3, cross_grid):
    assert clique_number(Instance([])) == 0
    assert clique_number(disjoint3) == 1
    assert clique_number(nested3) == 3
    assert clique_number(cross_grid) == 2
    assert max_depth(nested3, ["mid", "inner"]) == 2


def test_maximal_cliques_disjoint(disjoint3):
    cliques = maximal_cliques(disjoint3)
    assert sorted(map(sorted, cliques)) == [["a"], ["b"], ["c"]]


def test_maximal_cliques_cross_grid(cross_grid):
    cliques = maximal_cliques(cross_grid)
    expected = {frozenset(s) for s in (("r0", "r2"), ("r0", "r3"), ("r1", "r2"), ("r1", "r3"))}
    assert set(cliques) == expected
    assert len(cliques) == 4


def test_maximal_cliques_points_are_common_points():
    for inst in random_instances(["uniform", "squares"], 20, 15, seed=9, grid=40):
        cliques = maximal_cliques(inst)
        for ids, point in zip(cliques.cliques, cliques.points):
            assert {r.id for r in containing_set(inst, point)} == set(ids)


def test_maximal_cliques_cover_every_rect_and_stay_quadratic():
    for inst in random_instances(["uniform", "concentric"], 20, 30, seed=21, grid=60):
        cliques = maximal_cliques(inst)
        covered = set().union(*cliques.cliques) if len(cliques) else set()
        assert covered == set(inst.ids)
        assert len(cliques) <= len(inst) ** 2
        for p in range(len(inst)):
            assert cliques.containing(p)


def test_maximal_cliques_match_graph_oracle():
    for inst in random_instances(["uniform", "squares", "concentric"], 30, 12, seed=100, grid=40):
        assert set(maximal_cliques(inst)) == graph_maximal_cliques(inst)


def test_clique_number_matches_graph_oracle():
    for inst in random_instances(["uniform", "squares", "vertical"], 40, 20, seed=7, grid=50):
        assert clique_number(inst) == exact_clique_graph(inst)
