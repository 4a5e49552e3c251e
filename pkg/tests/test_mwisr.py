"""
Exact Poisson binomial tails, the clique LP, derandomized rounding and the
end-to-end approximation against the exact oracle.
"""
import itertools
from fractions import Fraction

import numpy as np
import pytest

from rectpack.cliques import clique_number, maximal_cliques
from rectpack.errors import PreconditionViolated
from rectpack.geom import Instance
from rectpack.instances import GeneratorSpec, generate
from rectpack.mwisr import (
    CliqueLpSolver,
    LpSolution,
    MultiplicityVector,
    PoissonBinomial,
    approximate_mwis,
    compute_pmf,
    expand_multiset,
    lp_integrality_ratio,
    poisson_binomial_tail,
    round_derandomized,
    rounding_parameter,
    solve_lp,
)
from rectpack.oracles import exact_mwis, validate_independent

from conftest import box, random_instances


def brute_force_tail(probs, threshold):
    total = Fraction(0)
    for bits in itertools.product((0, 1), repeat=len(probs)):
        if sum(bits) > threshold:
            weight = Fraction(1)
            for b, p in zip(bits, probs):
                weight *= p if b else 1 - p
            total += weight
    return total


def lp_for(inst, values):
    x = {rect_id: Fraction(v) for rect_id, v in values.items()}
    w_star = sum((inst[rect_id].weight * v for rect_id, v in x.items()), Fraction(0))
    return LpSolution(x, w_star, maximal_cliques(inst), (1e-9, 1e-7))


def test_tail_small_cases():
    assert poisson_binomial_tail([], 0) == 0
    assert poisson_binomial_tail([1, 1], 1) == 1
    assert poisson_binomial_tail(["1/2"] * 4, 2) == Fraction(5, 16)
    assert poisson_binomial_tail([Fraction(1, 3)], -1) == 1
    assert poisson_binomial_tail([Fraction(1, 3)], 5) == 0


def test_tail_matches_enumeration():
    rng = np.random.Generator(np.random.PCG64(17))
    for _ in range(30):
        size = int(rng.integers(0, 9))
        probs = [Fraction(int(rng.integers(0, 9)), 8) for _ in range(size)]
        for threshold in range(-1, size + 1):
            assert poisson_binomial_tail(probs, threshold) == brute_force_tail(probs, threshold)


def test_without_divides_out_one_variable():
    dist = PoissonBinomial([Fraction(1, 3), Fraction(1, 2), Fraction(3, 4)])
    assert len(dist) == 3
    reduced = dist.without(Fraction(1, 2))
    assert list(reduced.pmf) == list(compute_pmf([Fraction(1, 3), Fraction(3, 4)]))
    certain = PoissonBinomial([1, Fraction(1, 2)]).without(1)
    assert list(certain.pmf) == list(compute_pmf([Fraction(1, 2)]))


def test_probability_out_of_range():
    with pytest.raises(ValueError):
        compute_pmf([Fraction(3, 2)])


def test_rounding_parameter():
    assert rounding_parameter(0) == 1
    assert rounding_parameter(1) == 1
    assert rounding_parameter(2) == 7
    assert rounding_parameter(3) == 10
    assert rounding_parameter(100) == 42


def test_lp_single_rect_and_single_clique():
    single = Instance([box("a", 0, 1, 0, 1, 5)])
    lp = solve_lp(single)
    assert lp.x_star == {"a": 1}
    assert lp.w_star == 5

    clique = Instance([box(f"c{w}", -w, w, -w, w, w) for w in (1, 2, 3, 4)])
    lp = solve_lp(clique)
    assert abs(float(lp.w_star) - 4) < 1e-6
    assert lp.max_clique_sum <= 1


def test_lp_cross_grid(cross_grid):
    lp = solve_lp(cross_grid)
    assert abs(float(lp.w_star) - 2) < 1e-6
    assert len(lp.cliques) == 4
    for members in lp.cliques.members:
        assert sum(lp.x_star[cross_grid.rects[p].id] for p in members) <= 1


def test_lp_clique_sums_exact_on_random():
    for inst in random_instances(["uniform", "concentric"], 10, 30, seed=60, grid=100, weights="random"):
        lp = solve_lp(inst)
        assert lp.max_clique_sum <= 1
        assert all(0 <= v <= 1 for v in lp.x_star.values())


def test_lp_needs_positive_weights():
    inst = Instance([box("a", 0, 1, 0, 1, 0)])
    with pytest.raises(PreconditionViolated):
        CliqueLpSolver(log_mode="quiet").solve(inst)


def test_lp_empty_instance():
    lp = solve_lp(Instance([]))
    assert lp.w_star == 0 and lp.x_star == {}


def test_rounding_integral_solution(disjoint3):
    mv = round_derandomized(disjoint3, lp_for(disjoint3, {"a": 1, "b": 1, "c": 1}))
    assert mv.m == 10
    assert mv.y == {"a": 10, "b": 10, "c": 10}
    assert not mv.shortcut
    assert mv.weight == 30


def test_rounding_heavy_shortcut():
    inst = Instance([box("a", 0, 1, 0, 1, 10), box("b", 2, 3, 0, 1), box("c", 4, 5, 0, 1)])
    mv = round_derandomized(inst, lp_for(inst, {"a": 1, "b": 1, "c": 1}))
    assert mv.shortcut
    assert mv.y == {"a": mv.m, "b": 0, "c": 0}


def test_rounding_half_integral_cross_grid():
    inst = generate(GeneratorSpec(kind="crossgrid", n=6))
    lp = lp_for(inst, {rect_id: Fraction(1, 2) for rect_id in inst.ids})
    mv = round_derandomized(inst, lp)
    assert mv.m == 17
    assert all(y in (8, 9) for y in mv.y.values())
    for members in lp.cliques.members:
        assert sum(mv.y[inst.rects[p].id] for p in members) <= 2 * mv.m
    assert 2 * mv.weight >= mv.m * lp.w_star
    assert all(a <= b for a, b in zip(mv.expectations, mv.expectations[1:]))


def test_rounding_invariants_on_random():
    for inst in random_instances(["uniform", "squares", "concentric"], 15, 40, seed=90, grid=200, weights="random"):
        lp = solve_lp(inst)
        mv = round_derandomized(inst, lp)
        assert all(0 <= y <= mv.m for y in mv.y.values())
        for members in lp.cliques.members:
            assert sum(mv.y[inst.rects[p].id] for p in members) <= 2 * mv.m
        assert 2 * mv.weight >= mv.m * lp.w_star


def test_expand_multiset_nests_copies():
    inst = Instance([box("a", 0, 2, 0, 2), box("b", 5, 6, 0, 1)])
    multiset = expand_multiset(inst, MultiplicityVector({"a": 3, "b": 0}, m=10))
    assert multiset.ids == ["a#0", "a#1", "a#2"]
    assert set(multiset.origins.values()) == {"a"}
    assert clique_number(multiset) == 3
    assert not multiset.has_height_ties


def test_expand_multiset_single_copies_keep_graph(cross_grid):
    multiset = expand_multiset(cross_grid, MultiplicityVector({r: 1 for r in cross_grid.ids}, m=1))
    assert np.array_equal(multiset.adjacency, cross_grid.adjacency)


def test_approx_disjoint_takes_everything(disjoint3):
    result = approximate_mwis(disjoint3, log_mode="quiet")
    assert result.chosen == {"a", "b", "c"}
    assert result.weight == 3
    assert result.w_star == 3


def test_approx_single_clique_takes_heaviest():
    clique = Instance([box(f"c{w}", -w, w, -w, w, w) for w in (1, 2, 3, 4)])
    result = approximate_mwis(clique, log_mode="quiet")
    assert result.chosen == {"c4"}
    assert result.weight == 4
    assert result.approximation_ratio(Fraction(4)) == 1


def test_approx_drops_zero_weights():
    inst = Instance([box("a", 0, 1, 0, 1, 0), box("b", 2, 3, 0, 1, 2)])
    result = approximate_mwis(inst, log_mode="quiet")
    assert result.dropped == ["a"]
    assert result.chosen == {"b"}
    assert result.weight == 2


def test_approx_only_zero_weights():
    result = approximate_mwis(Instance([box("a", 0, 1, 0, 1, 0)]), log_mode="quiet")
    assert result.chosen == frozenset()
    assert result.approximation_ratio(Fraction(0)) is None


def test_approx_against_exact_oracle():
    for inst in random_instances(["uniform", "squares"], 8, 12, seed=300, n_min=4, grid=60, weights="random"):
        result = approximate_mwis(inst, log_mode="quiet")
        _, optimum = exact_mwis(inst)
        assert validate_independent(inst, result.chosen)
        assert result.weight == sum(inst[r].weight for r in result.chosen)
        assert result.certified_lower_bound <= result.weight <= optimum
        assert result.weight * result.multiset_colors >= result.multiset_weight


def test_integrality_ratio_cross_grid(cross_grid):
    assert abs(float(lp_integrality_ratio(cross_grid)) - 1) < 1e-6
