# LP relaxation over the maximal cliques, solved in floating point with HiGHS
# and brought back to exact rationals.

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

import numpy as np
from scipy.optimize import linprog
from scipy.sparse import csr_matrix

from rectpack.cliques.maximal import CliqueList, maximal_cliques
from rectpack.errors import PreconditionViolated, SolverFailure
from rectpack.geom.instance import Instance
from rectpack.utils.logger import SolverLogger

logger = logging.getLogger(__name__)


@dataclass
class LpSolution:
    x_star: Dict[str, Fraction]
    w_star: Fraction
    cliques: CliqueList
    tolerances: Tuple[float, float]
    objective: float = 0.0
    max_clique_sum: Fraction = Fraction(0)
    status: str = ""

    def value(self, rect_id: str) -> Fraction:
        return self.x_star[rect_id]


def truncate(value: Fraction, bits: int) -> Fraction:
    """Round down onto the grid of multiples of 2^-bits."""
    scale = 1 << bits
    return Fraction(math.floor(value * scale), scale)


def rationalize(value: float, tol: float, bits: int) -> Fraction:
    """Snap to a small-denominator rational when one is within ``tol``, then
    truncate onto the 2^-bits grid."""
    value = min(max(value, 0.0), 1.0)
    simple = Fraction(value).limit_denominator(1000)
    exact = simple if abs(float(simple) - value) <= tol else Fraction(value)
    return truncate(exact, bits)


def constraint_matrix(cliques: CliqueList, n: int) -> csr_matrix:
    rows = [c for c, members in enumerate(cliques.members) for _ in members]
    cols = [p for members in cliques.members for p in members]
    data = np.ones(len(cols))
    return csr_matrix((data, (rows, cols)), shape=(len(cliques), n))


class CliqueLpSolver:
    """
    Maximize sum w_R x_R subject to sum over each maximal clique <= 1 and
    0 <= x <= 1.

    The float solution is clipped, snapped to a nearby small-denominator
    rational when one lies within the feasibility tolerance, truncated to
    denominator 2^bits and, if a
    clique sum still exceeds 1, divided by the largest sum and truncated again,
    so every clique sum of the returned x* is at most 1 exactly.

    Example:
        ```python
        solver = CliqueLpSolver(feas_tol=1e-9, opt_tol=1e-7)
        lp = solver.solve(inst)
        lp.w_star   # Fraction(2, 1) on the 2x2 cross grid
        ```
    """

    def __init__(
        self,
        feas_tol: Optional[float] = None,
        opt_tol: Optional[float] = None,
        time_limit: Optional[float] = None,
        denominator_bits: Optional[int] = None,
        log_mode: Optional[str] = None,
    ):
        from rectpack.config.config_manager import config

        lp_config = config.get_lp_config()
        self.feas_tol = float(feas_tol if feas_tol is not None else lp_config.get("feas_tol", 1e-9))
        self.opt_tol = float(opt_tol if opt_tol is not None else lp_config.get("opt_tol", 1e-7))
        self.time_limit = float(time_limit if time_limit is not None else lp_config.get("time_limit", 300))
        self.denominator_bits = int(
            denominator_bits if denominator_bits is not None else lp_config.get("denominator_bits", 64)
        )
        self.logger = SolverLogger("lp", log_mode or config.get_log_mode())

    def solve(self, inst: Instance, cliques: Optional[CliqueList] = None) -> LpSolution:
        if any(r.weight <= 0 for r in inst):
            raise PreconditionViolated("the clique LP needs strictly positive weights")
        tolerances = (self.feas_tol, self.opt_tol)
        if len(inst) == 0:
            return LpSolution({}, Fraction(0), CliqueList(), tolerances, status="empty")

        cliques = cliques if cliques is not None else maximal_cliques(inst)
        weights = np.array([float(r.weight) for r in inst])
        self.logger.log(f"solving LP: {len(inst)} variables, {len(cliques)} clique constraints", "executing")
        result = linprog(
            -weights,
            A_ub=constraint_matrix(cliques, len(inst)),
            b_ub=np.ones(len(cliques)),
            bounds=(0, 1),
            method="highs",
            options={
                "primal_feasibility_tolerance": self.feas_tol,
                "dual_feasibility_tolerance": self.opt_tol,
                "time_limit": self.time_limit,
            },
        )
        if result.status != 0 or result.x is None:
            self.logger.log(f"LP failed: {result.message}", "error")
            raise SolverFailure(f"LP solver failed (status {result.status}): {result.message}")

        bits = self.denominator_bits
        x = [rationalize(float(v), self.feas_tol, bits) for v in result.x]
        largest = max((sum((x[p] for p in members), Fraction(0)) for members in cliques.members), default=Fraction(0))
        if largest > 1:
            self.logger.log(f"clique sum {float(largest):.3g} above 1, rescaling", "warn")
            x = [truncate(v / largest, bits) for v in x]
            largest = max(sum((x[p] for p in members), Fraction(0)) for members in cliques.members)

        x_star = {r.id: v for r, v in zip(inst, x)}
        w_star = sum((r.weight * v for r, v in zip(inst, x)), Fraction(0))
        self.logger.log(f"LP optimum {float(w_star):.6g}", "done")
        return LpSolution(
            x_star=x_star,
            w_star=w_star,
            cliques=cliques,
            tolerances=tolerances,
            objective=float(-result.fun),
            max_clique_sum=largest,
            status=str(result.message),
        )


def solve_lp(
    inst: Instance,
    feas_tol: Optional[float] = None,
    opt_tol: Optional[float] = None,
    log_mode: Optional[str] = None,
) -> LpSolution:
    return CliqueLpSolver(feas_tol=feas_tol, opt_tol=opt_tol, log_mode=log_mode).solve(inst)
