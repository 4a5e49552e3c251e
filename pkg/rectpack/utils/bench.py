# Acceptance suites run by `rectpack bench`. Each suite draws its instances
# from the seeded generators, checks one property per instance and reports
# trial counts, failures and summary numbers.

import itertools
import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import numpy as np

from rectpack.cliques.maximal import clique_number, maximal_cliques
from rectpack.coloring.agb import agb_coloring
from rectpack.coloring.greedy import corner_coloring, degeneracy_greedy
from rectpack.coloring.warmup import warmup_color_cc, warmup_color_vertical
from rectpack.geom.instance import Instance
from rectpack.geom.perturb import ensure_distinct_heights, perturb
from rectpack.hierarchy.coloring import color_bound, hierarchical_coloring
from rectpack.hierarchy.decomposition import (
    build_decomposition,
    check_clique_lemma,
    check_partition_lemma,
    check_tree_invariants,
    check_witness_corollary,
)
from rectpack.hierarchy.reduction import compute_T, residual_clique_bound, sparse_certificate
from rectpack.instances.generators import GeneratorSpec, generate
from rectpack.mwisr.pipeline import approximate_mwis
from rectpack.mwisr.poisson import poisson_binomial_tail
from rectpack.mwisr.rounding import round_derandomized
from rectpack.mwisr.solver import solve_lp
from rectpack.oracles.cliques import exact_clique_graph, graph_maximal_cliques
from rectpack.oracles.mwis import exact_mwis
from rectpack.oracles.validate import validate_coloring, validate_independent
from rectpack.utils import binary_words
from rectpack.utils.calculator import SuiteResult, TrialOutcome, run_concurrent

logger = logging.getLogger(__name__)

KINDS = ["uniform", "squares", "concentric", "vertical", "crossgrid"]
# LP solves inside suites stay off the console
SUITE_LOG_MODE = "quiet"


def _specs(seed: int, trials: int, kinds: List[str], n_min: int, n_max: int,
           grid: int = 10_000, weights: str = "unit") -> List[GeneratorSpec]:
    rng = np.random.Generator(np.random.PCG64(seed))
    specs = []
    for t in range(trials):
        specs.append(GeneratorSpec(
            kind=kinds[int(rng.integers(0, len(kinds)))],
            n=int(rng.integers(n_min, n_max + 1)),
            seed=seed + t,
            grid=grid,
            weights=weights,
        ))
    return specs


def _proper(inst: Instance, coloring) -> Optional[str]:
    verdict = validate_coloring(inst, coloring)
    return None if verdict.ok else f"{coloring.algorithm}: {verdict.pair[0]}/{verdict.pair[1]} share a color"


def check_properness(spec: GeneratorSpec) -> TrialOutcome:
    inst = ensure_distinct_heights(generate(spec))
    colorings = [hierarchical_coloring(inst), agb_coloring(inst), degeneracy_greedy(inst)]
    if spec.kind == "squares":
        colorings.append(corner_coloring(inst))
    if spec.kind == "concentric":
        colorings.append(warmup_color_cc(inst))
    if spec.kind == "vertical":
        colorings.append(warmup_color_vertical(inst))
    for coloring in colorings:
        problem = _proper(inst, coloring)
        if problem:
            return TrialOutcome(False, detail=f"{spec}: {problem}")
    hier = colorings[0]
    bound = color_bound(hier.stats["k"])
    if hier.num_colors > bound:
        return TrialOutcome(False, detail=f"{spec}: {hier.num_colors} colors above {bound}")
    return TrialOutcome(True, {"hier_colors_over_bound": hier.num_colors / bound,
                               "hier_colors_over_omega": hier.num_colors / max(hier.stats["omega"], 1)})


def check_agb_bound(spec: GeneratorSpec) -> TrialOutcome:
    inst = generate(spec)
    coloring = agb_coloring(inst)
    omega = coloring.stats["omega"]
    bound = max(4 * omega * (omega - 1), 1)
    ok = coloring.num_colors <= bound and validate_coloring(inst, coloring).ok
    return TrialOutcome(ok, {"agb_colors_over_bound": coloring.num_colors / bound},
                        detail=f"{spec}: {coloring.num_colors} colors, bound {bound}")


def check_vertical_bound(spec: GeneratorSpec) -> TrialOutcome:
    inst = generate(spec)
    coloring = warmup_color_vertical(inst)
    omega = clique_number(inst)
    bound = max(3 * omega - 2, 1)
    ok = coloring.num_colors <= bound and validate_coloring(inst, coloring).ok
    return TrialOutcome(ok, {"vertical_colors_over_bound": coloring.num_colors / bound},
                        detail=f"{spec}: {coloring.num_colors} colors, bound {bound}")


def check_lemmas(spec: GeneratorSpec) -> TrialOutcome:
    inst = ensure_distinct_heights(generate(spec))
    tree = build_decomposition(inst)
    for check in (check_tree_invariants, check_partition_lemma, check_witness_corollary, check_clique_lemma):
        verdict = check(tree, inst)
        if not verdict:
            return TrialOutcome(False, detail=f"{spec}: {check.__name__}: {verdict.violation}")
    for i in range(tree.k + 1):
        for w in binary_words(i):
            T, witnesses = compute_T(tree, inst, i, w)
            if i <= 2 and T:
                return TrialOutcome(False, detail=f"{spec}: T_{i}({w}) not empty")
            residual, bound = residual_clique_bound(tree, inst, i, w)
            if residual > bound:
                return TrialOutcome(False, detail=f"{spec}: residual clique {residual} > {bound} at ({i}, {w})")
            sparse_certificate(tree, inst, i, w, T, witnesses)
    return TrialOutcome(True, {"k": tree.k})


def check_clique_number(spec: GeneratorSpec) -> TrialOutcome:
    inst = generate(spec)
    ours, graph = clique_number(inst), exact_clique_graph(inst)
    return TrialOutcome(ours == graph, detail=f"{spec}: {ours} != {graph}")


def check_maximal_cliques(spec: GeneratorSpec) -> TrialOutcome:
    inst = generate(spec)
    ours = set(maximal_cliques(inst).cliques)
    return TrialOutcome(ours == graph_maximal_cliques(inst), detail=f"{spec}: clique families differ")


def enumerate_tail(probs: List[Fraction], threshold: int) -> Fraction:
    total = Fraction(0)
    for bits in itertools.product((0, 1), repeat=len(probs)):
        if sum(bits) > threshold:
            weight = Fraction(1)
            for b, p in zip(bits, probs):
                weight *= p if b else 1 - p
            total += weight
    return total


def check_poisson(seed: int) -> TrialOutcome:
    rng = np.random.Generator(np.random.PCG64(seed))
    size = int(rng.integers(0, 13))
    probs = [Fraction(int(v), 16) for v in rng.integers(0, 17, size=size)]
    threshold = int(rng.integers(-1, size + 2))
    ok = poisson_binomial_tail(probs, threshold) == enumerate_tail(probs, threshold)
    return TrialOutcome(ok, detail=f"seed {seed}: tail mismatch for {probs} > {threshold}")


def check_rounding(spec: GeneratorSpec) -> TrialOutcome:
    inst = generate(spec)
    lp = solve_lp(inst, log_mode=SUITE_LOG_MODE)
    mv = round_derandomized(inst, lp)
    for members in lp.cliques.members:
        if sum(mv.y[inst.rects[p].id] for p in members) > 2 * mv.m:
            return TrialOutcome(False, detail=f"{spec}: clique above 2m")
    floor = mv.m * lp.w_star * (1 - Fraction(1, 10 ** 6)) / 2
    monotone = all(b >= a for a, b in zip(mv.expectations, mv.expectations[1:]))
    ok = mv.weight >= floor and monotone
    return TrialOutcome(ok, {"rounded_over_lp": float(mv.weight / (mv.m * lp.w_star)) if lp.w_star else 1.0},
                        detail=f"{spec}: weight {mv.weight} below {floor} or expectation dropped")


def check_mwisr(spec: GeneratorSpec) -> TrialOutcome:
    inst = generate(spec)
    result = approximate_mwis(inst, log_mode=SUITE_LOG_MODE)
    _, optimum = exact_mwis(inst)
    independent = validate_independent(inst, result.chosen).ok
    floor = result.m * result.w_star * (1 - Fraction(1, 10 ** 6)) / (2 * max(result.multiset_colors, 1))
    ok = independent and floor <= result.weight <= optimum
    ratio = result.approximation_ratio(optimum)
    return TrialOutcome(ok, {"approximation_ratio": float(ratio) if ratio is not None else 1.0},
                        detail=f"{spec}: weight {result.weight}, optimum {optimum}, floor {floor}")


def check_perturbation(spec: GeneratorSpec) -> TrialOutcome:
    inst = generate(spec)
    moved = perturb(inst)
    ok = bool((inst.adjacency == moved.adjacency).all()) and not moved.has_height_ties
    return TrialOutcome(ok, detail=f"{spec}: perturbation changed the intersection graph")


def _count(settings: Dict, key: str, scale: float) -> int:
    return max(1, int(round(settings.get(key, 10) * scale)))


def suites(settings: Dict, seed: int, scale: float) -> Dict[str, Callable[[], SuiteResult]]:
    """Suite name -> runner, with trial counts from the ``bench`` config."""
    return {
        "properness": lambda: run_concurrent(
            "properness", check_properness,
            _specs(seed, _count(settings, "properness_instances", scale), KINDS, 20, 200)),
        "agb-bound": lambda: run_concurrent(
            "agb-bound", check_agb_bound,
            _specs(seed + 1, _count(settings, "bound_instances", scale), ["uniform", "concentric"], 20, 120)),
        "vertical-bound": lambda: run_concurrent(
            "vertical-bound", check_vertical_bound,
            _specs(seed + 2, _count(settings, "bound_instances", scale), ["vertical"], 20, 120)),
        "lemmas": lambda: run_concurrent(
            "lemmas", check_lemmas,
            _specs(seed + 3, _count(settings, "lemma_instances", scale), KINDS, 1, settings.get("lemma_max_n", 120))),
        "clique-number": lambda: run_concurrent(
            "clique-number", check_clique_number,
            _specs(seed + 4, _count(settings, "clique_instances", scale), KINDS, 0, settings.get("clique_max_n", 40))),
        "maximal-cliques": lambda: run_concurrent(
            "maximal-cliques", check_maximal_cliques,
            _specs(seed + 5, _count(settings, "maximal_clique_instances", scale), KINDS, 1,
                   settings.get("maximal_clique_max_n", 12), grid=40)),
        "poisson": lambda: run_concurrent(
            "poisson", check_poisson,
            [seed + 6 + t for t in range(_count(settings, "poisson_vectors", scale))]),
        "rounding": lambda: run_concurrent(
            "rounding", check_rounding,
            _specs(seed + 7, _count(settings, "rounding_instances", scale), ["uniform", "squares"], 2,
                   settings.get("rounding_max_n", 60), weights="random")),
        "mwisr": lambda: run_concurrent(
            "mwisr", check_mwisr,
            _specs(seed + 8, _count(settings, "mwisr_instances", scale), ["uniform", "squares", "crossgrid"], 1,
                   settings.get("mwisr_max_n", 22), weights="random")),
        "perturbation": lambda: run_concurrent(
            "perturbation", check_perturbation,
            _specs(seed + 9, _count(settings, "perturb_instances", scale), ["uniform", "squares"], 2, 60, grid=8)),
    }
