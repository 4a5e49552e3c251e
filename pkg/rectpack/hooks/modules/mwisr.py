from typing import Any, Dict

from rectpack.geom.instance import Instance
from rectpack.geom.scalar import format_scalar
from rectpack.hooks.types.mwisr import MwisrParams, MwisrSolver
from rectpack.hooks.utils.validate import validate
from rectpack.mwisr.pipeline import approximate_mwis
from rectpack.oracles.mwis import exact_mwis
from rectpack.utils.logger import SolverLogger


def _ordered(inst: Instance, ids) -> list:
    return [rect_id for rect_id in inst.ids if rect_id in ids]


@validate(MwisrParams)
def useMwisrSolver(params: MwisrParams) -> MwisrSolver:
    """
    Return a function that solves MWISR on an instance and reports the result
    as a JSON-ready dict with exact numbers rendered as strings.

    Args:
        params (MwisrParams): method ("approx" or "exact") and LP tolerances.
    """
    logger = SolverLogger("mwisr", params.log_mode)

    def solveApprox(inst: Instance) -> Dict[str, Any]:
        result = approximate_mwis(inst, params.feas_tol, params.opt_tol, log_mode=params.log_mode)
        logger.log(f"picked {len(result.chosen)} rectangles of weight {float(result.weight):.6g}", "done")
        return {
            "w_star": format_scalar(result.w_star),
            "m": result.m,
            "num_colors": result.multiset_colors,
            "chosen": _ordered(inst, result.chosen),
            "weight": format_scalar(result.weight),
            "certified_lower_bound": format_scalar(result.certified_lower_bound),
        }

    def solveExact(inst: Instance) -> Dict[str, Any]:
        chosen, weight = exact_mwis(inst)
        logger.log(f"optimum {float(weight):.6g}", "done")
        return {"chosen": _ordered(inst, chosen), "weight": format_scalar(weight)}

    return solveApprox if params.method == "approx" else solveExact
