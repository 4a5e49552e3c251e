from rectpack.mwisr.pipeline import (
    ApproxResult,
    approximate_mwis,
    certified_lower_bound,
    expand_multiset,
    lp_integrality_ratio,
)
from rectpack.mwisr.poisson import PoissonBinomial, compute_pmf, poisson_binomial_tail
from rectpack.mwisr.rounding import MultiplicityVector, round_derandomized, rounding_parameter
from rectpack.mwisr.solver import CliqueLpSolver, LpSolution, solve_lp

__all__ = [
    "ApproxResult",
    "CliqueLpSolver",
    "LpSolution",
    "MultiplicityVector",
    "PoissonBinomial",
    "approximate_mwis",
    "certified_lower_bound",
    "compute_pmf",
    "expand_multiset",
    "lp_integrality_ratio",
    "poisson_binomial_tail",
    "round_derandomized",
    "rounding_parameter",
    "solve_lp",
]
