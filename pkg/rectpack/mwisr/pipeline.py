# End-to-end approximation for maximum weight independent sets of rectangles:
# LP, rounding, multiset expansion, coloring, heaviest color class.

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional

from rectpack.errors import InternalBoundExceeded
from rectpack.geom.instance import Instance
from rectpack.geom.perturb import perturb
from rectpack.geom.rect import Rect
from rectpack.hierarchy.coloring import hierarchical_coloring
from rectpack.mwisr.rounding import MultiplicityVector, round_derandomized
from rectpack.mwisr.solver import CliqueLpSolver, LpSolution
from rectpack.utils.logger import SolverLogger

logger = logging.getLogger(__name__)


@dataclass
class ApproxResult:
    chosen: FrozenSet[str]
    weight: Fraction
    w_star: Fraction
    m: int
    multiset_colors: int
    per_class_weights: List[Fraction] = field(default_factory=list)
    multiset_weight: Fraction = Fraction(0)
    certified_lower_bound: Fraction = Fraction(0)
    dropped: List[str] = field(default_factory=list)

    def approximation_ratio(self, optimum: Fraction) -> Optional[Fraction]:
        """optimum / weight, or None when nothing was chosen."""
        if self.weight == 0:
            return None
        return Fraction(optimum) / self.weight


def expand_multiset(inst: Instance, mv: MultiplicityVector) -> Instance:
    """
    Replace every rectangle by y_R copies ``<id>#<c>`` and perturb, which
    nests the copies; ``origins`` maps each copy back to its rectangle.
    """
    copies: List[Rect] = []
    origins: Dict[str, str] = {}
    for rect in inst:
        for c in range(mv.y.get(rect.id, 0)):
            copy_id = f"{rect.id}#{c}"
            copies.append(Rect(copy_id, rect.x_lo, rect.x_hi, rect.y_lo, rect.y_hi, rect.weight))
            origins[copy_id] = rect.id
    return perturb(Instance(copies, origins=origins))


def certified_lower_bound(m: int, w_star: Fraction, colors: int, feas_tol: float, opt_tol: float) -> Fraction:
    if colors == 0:
        return Fraction(0)
    slack = 1 - Fraction(opt_tol) - Fraction(feas_tol)
    return m * w_star * slack / (2 * colors)


def approximate_mwis(
    inst: Instance,
    feas_tol: Optional[float] = None,
    opt_tol: Optional[float] = None,
    log_mode: Optional[str] = None,
) -> ApproxResult:
    """
    Approximate a maximum weight independent set.

    Zero-weight rectangles cannot help and are dropped first. The result is
    independent and weighs at least m w* (1 - opt_tol - feas_tol) / (2 C),
    C the number of colors used on the multiset.

    Example:
        ```python
        result = approximate_mwis(load("weighted.json"))
        validate_independent(inst, result.chosen).ok   # True
        ```
    """
    solver = CliqueLpSolver(feas_tol=feas_tol, opt_tol=opt_tol, log_mode=log_mode)
    dropped = [r.id for r in inst if r.weight == 0]
    if dropped:
        solver.logger.log(f"dropping {len(dropped)} zero-weight rectangles", "warn")
        inst = inst.subset([r for r in inst if r.weight > 0])
    if len(inst) == 0:
        return ApproxResult(frozenset(), Fraction(0), Fraction(0), 0, 0, dropped=dropped)

    lp = solver.solve(inst)
    mv = round_derandomized(inst, lp)
    multiset = expand_multiset(inst, mv)
    coloring = hierarchical_coloring(multiset)
    solver.logger.log(
        f"m={mv.m}, {len(multiset)} copies, {coloring.num_colors} colors", "info"
    )

    classes: Dict[int, set] = {}
    for copy_id, c in coloring.colors.items():
        classes.setdefault(c, set()).add(multiset.origins[copy_id])
    per_class = [
        sum((inst[r].weight for r in classes.get(c, ())), Fraction(0))
        for c in range(coloring.num_colors)
    ]
    best = max(range(len(per_class)), key=lambda c: (per_class[c], -c), default=0)
    chosen = frozenset(classes.get(best, ()))
    weight = per_class[best] if per_class else Fraction(0)
    if weight * coloring.num_colors < mv.weight:
        raise InternalBoundExceeded(f"best class weighs {weight}, below the multiset average")

    return ApproxResult(
        chosen=chosen,
        weight=weight,
        w_star=lp.w_star,
        m=mv.m,
        multiset_colors=coloring.num_colors,
        per_class_weights=per_class,
        multiset_weight=mv.weight,
        certified_lower_bound=certified_lower_bound(mv.m, lp.w_star, coloring.num_colors, solver.feas_tol, solver.opt_tol),
        dropped=dropped,
    )


def lp_integrality_ratio(inst: Instance, lp: Optional[LpSolution] = None) -> Fraction:
    """LP optimum over the exact optimum, for oracle-sized instances."""
    from rectpack.oracles.mwis import exact_mwis

    lp = lp if lp is not None else CliqueLpSolver().solve(inst)
    _, optimum = exact_mwis(inst)
    if optimum == 0:
        return Fraction(1)
    return lp.w_star / optimum
