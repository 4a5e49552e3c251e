# Warm-up colorings for two restricted families: crossing/containment only,
# and vertical intersections only. Both share the level assignment below.

import logging
from typing import Dict

import numpy as np

from rectpack.coloring.types import Coloring, WarmupLevels, first_pair
from rectpack.errors import InternalBoundExceeded, PreconditionViolated
from rectpack.geom.instance import Instance, Members

logger = logging.getLogger(__name__)


def _require_distinct_heights(inst: Instance, pos: np.ndarray):
    heights = [inst.heights[p] for p in pos]
    if len(set(heights)) != len(heights):
        raise PreconditionViolated("warm-up levels need pairwise distinct heights; perturb the instance first")


def warmup_levels(inst: Instance, members: Members = None) -> WarmupLevels:
    """
    Assign levels tallest first: R gets 1 + the largest j such that some point
    of R lies in already leveled members of V(R) covering every level 1..j.

    A witnessing clique meets R in a box whose left edge is the x_lo of R or of
    one of the clique members, and every member of V(R) spans R's top, so it is
    enough to probe the points (x, y_hi(R)) for those x.
    """
    pos = inst.positions(members)
    _require_distinct_heights(inst, pos)
    spans = inst.spans[np.ix_(pos, pos)]
    x_lo, x_hi = inst.x_lo[pos], inst.x_hi[pos]
    level = np.zeros(len(pos), dtype=np.int64)
    result = WarmupLevels()

    for v in np.argsort(inst.height_rank[pos], kind="stable"):
        ups = np.nonzero(spans[v])[0]
        probes = {int(x_lo[v])}
        probes.update(int(x) for x in x_lo[ups] if x_lo[v] <= x <= x_hi[v])
        best, best_members, best_x = 0, np.empty(0, dtype=np.int64), int(x_lo[v])
        for x in sorted(probes):
            present = ups[(x_lo[ups] <= x) & (x <= x_hi[ups])]
            seen = set(level[present].tolist())
            j = 0
            while j + 1 in seen:
                j += 1
            if j > best:
                best, best_members, best_x = j, present, x
        level[v] = best + 1
        rect_id = inst.rects[pos[v]].id
        result.level_of[rect_id] = best + 1
        result.witness_clique[rect_id] = frozenset(inst.ids_at(pos[best_members]))
        result.witness_point[rect_id] = inst.point_at(best_x, inst.y_hi[pos[v]])

    result.level_of = {inst.rects[p].id: result.level_of[inst.rects[p].id] for p in pos}
    return result


def warmup_color_cc(inst: Instance, members: Members = None) -> Coloring:
    """One color per warm-up level; needs every intersecting pair to cross or nest."""
    pos = inst.positions(members)
    corner_only = inst.adjacency & (inst.corner | inst.corner.T) & ~inst.contains & ~inst.contains.T
    pair = first_pair(corner_only, pos)
    if pair is not None:
        ids = tuple(inst.ids_at(pair))
        raise PreconditionViolated(f"corner pair {ids[0]}/{ids[1]} in a crossing/containment family", pair=ids)
    levels = warmup_levels(inst, pos)
    colors = {inst.position(rect_id): lv - 1 for rect_id, lv in levels.level_of.items()}
    return Coloring.from_positions(inst, colors, "warmup-cc", levels=levels.num_levels)


def warmup_color_vertical(inst: Instance, members: Members = None) -> Coloring:
    """
    Level 1 takes color 0; each level i >= 2 is 3-colored greedily tallest
    first on the palette starting at 1 + 3(i - 2). At most max(3w - 2, 1)
    colors for clique number w.
    """
    pos = inst.positions(members)
    pair = first_pair(inst.adjacency & ~inst.vertical, pos)
    if pair is not None:
        ids = tuple(inst.ids_at(pair))
        raise PreconditionViolated(f"non-vertical pair {ids[0]}/{ids[1]} in a vertical-only family", pair=ids)
    levels = warmup_levels(inst, pos)

    colors: Dict[int, int] = {}
    offsets: Dict[str, int] = {"level1": 0}
    for p in inst.by_height(pos):
        lv = levels.level_of[inst.rects[p].id]
        if lv == 1:
            colors[int(p)] = 0
            continue
        base = 1 + 3 * (lv - 2)
        offsets[f"level{lv}"] = base
        used = {colors[q] - base for q in np.nonzero(inst.adjacency[p])[0]
                if q in colors and levels.level_of[inst.rects[q].id] == lv}
        free = [c for c in range(3) if c not in used]
        if not free:
            raise InternalBoundExceeded(
                f"level {lv} needs a fourth color at {inst.rects[p].id}"
            )
        colors[int(p)] = base + free[0]
    offsets = dict(sorted(offsets.items(), key=lambda item: item[1]))
    return Coloring.from_positions(inst, colors, "warmup-vertical", offsets, levels=levels.num_levels)
