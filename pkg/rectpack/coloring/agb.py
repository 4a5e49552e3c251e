import logging
from typing import Dict, List

import numpy as np

from rectpack.cliques.maximal import max_depth
from rectpack.coloring.greedy import corner_coloring
from rectpack.coloring.types import Coloring
from rectpack.geom.instance import Instance, Members

logger = logging.getLogger(__name__)


def crossing_levels(inst: Instance, members: Members = None) -> Dict[int, int]:
    """
    Longest chain ending at each member in the order R < R' iff R' is in X(R).

    A member of X(R) is strictly taller than R, so walking members tallest
    first means every chain predecessor already has its level. Each level is
    free of crossing pairs.
    """
    pos = inst.positions(members)
    above = inst.crossing_above[np.ix_(pos, pos)]
    local_rank = inst.height_rank[pos]
    level = np.zeros(len(pos), dtype=np.int64)
    for v in np.argsort(local_rank, kind="stable"):
        ups = np.nonzero(above[v])[0]
        level[v] = 1 + (int(level[ups].max()) if len(ups) else 0)
    return {int(pos[v]): int(level[v]) for v in range(len(pos))}


def agb_coloring(inst: Instance, members: Members = None) -> Coloring:
    """
    Color ``members`` with at most max(4w(w - 1), 1) colors, w their clique
    number: split into crossing-free levels, then corner-color each level on
    its own palette.

    Example:
        ```python
        inst = Instance([Rect("wide", 0, 10, 2, 8), Rect("tall", 2, 8, 0, 10)])
        agb_coloring(inst).num_colors   # 2
        ```
    """
    pos = inst.positions(members)
    levels = crossing_levels(inst, pos)
    by_level: Dict[int, List[int]] = {}
    for p, lv in levels.items():
        by_level.setdefault(lv, []).append(p)

    assignment: Dict[int, int] = {}
    offsets: Dict[str, int] = {}
    offset = 0
    for lv in sorted(by_level):
        part = corner_coloring(inst, np.array(by_level[lv], dtype=np.int64))
        offsets[f"level{lv}"] = offset
        for rect_id, c in part.colors.items():
            assignment[inst.position(rect_id)] = offset + c
        offset += part.num_colors

    omega = max_depth(inst, pos)
    return Coloring.from_positions(
        inst,
        assignment,
        "agb",
        offsets,
        levels=len(by_level),
        omega=omega,
        bound=max(4 * omega * (omega - 1), 1) if len(pos) else 0,
    )
