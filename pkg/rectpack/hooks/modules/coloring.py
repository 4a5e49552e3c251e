from typing import Dict

from rectpack.coloring.agb import agb_coloring
from rectpack.coloring.greedy import corner_coloring, degeneracy_greedy
from rectpack.coloring.types import Coloring
from rectpack.coloring.warmup import warmup_color_cc, warmup_color_vertical
from rectpack.geom.instance import Instance
from rectpack.geom.perturb import ensure_distinct_heights
from rectpack.hierarchy.coloring import hierarchical_coloring
from rectpack.hooks.types.coloring import ColoringAlgorithm, ColorParams, Colorer
from rectpack.hooks.utils.validate import validate
from rectpack.utils.logger import ColoringLogger

ALGORITHMS: Dict[ColoringAlgorithm, Colorer] = {
    "hier": hierarchical_coloring,
    "agb": agb_coloring,
    "corner": corner_coloring,
    "sparse": degeneracy_greedy,
    "warmup-cc": warmup_color_cc,
    "warmup-vertical": warmup_color_vertical,
}

# these read the height order and need it strict
NEEDS_DISTINCT_HEIGHTS = {"hier", "warmup-cc", "warmup-vertical"}


@validate(ColorParams)
def useColorer(params: ColorParams) -> Colorer:
    """
    Return a function that colors an instance with the chosen algorithm.

    Instances with height ties are perturbed first when the algorithm needs a
    strict height order; perturbation keeps ids and the intersection graph, so
    the coloring applies to the instance as given.

    Args:
        params (ColorParams): algorithm name and log mode.
    """
    color = ALGORITHMS[params.algo]
    logger = ColoringLogger(params.algo, params.log_mode)

    def colorInstance(inst: Instance) -> Coloring:
        target = inst
        if params.algo in NEEDS_DISTINCT_HEIGHTS and inst.has_height_ties:
            logger.log("height ties found, perturbing", "info")
            target = ensure_distinct_heights(inst)
        logger.log(f"coloring {len(inst)} rectangles", "executing")
        coloring = color(target)
        logger.log(f"{coloring.num_colors} colors", "done")
        return coloring

    return colorInstance
