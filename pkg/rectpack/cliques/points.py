# Candidate points and point depth.
#
# A family of pairwise intersecting boxes has a common point (Helly for
# intervals, once per axis), and the top-left corner of that common region is
# (max x_lo, min y_hi) over the members: one left edge and one top edge. So the
# points (x_lo(R'), y_hi(R'')) see every clique, and depth over them gives the
# clique number.

import logging
from typing import Iterable, List, Optional, Set, Union

import numpy as np

from rectpack.geom.instance import Instance
from rectpack.geom.rect import Point, Rect

logger = logging.getLogger(__name__)


def candidate_points(inst: Instance) -> List[Point]:
    """All distinct (x_lo(R'), y_hi(R'')) in first-seen order."""
    seen = set()
    points = []
    for a in inst:
        for b in inst:
            p = Point(a.x_lo, b.y_hi)
            if p not in seen:
                seen.add(p)
                points.append(p)
    return points


def containing_set(
    inst: Instance,
    p: Point,
    within: Optional[Iterable[Union[Rect, str]]] = None,
) -> Set[Rect]:
    """The rectangles of ``within`` (default: all) that contain ``p``."""
    pos = inst.positions(within)
    return {inst.rects[i] for i in pos if inst.rects[i].contains_point(p)}


def point_grid(inst: Instance, pos: np.ndarray):
    """
    Membership masks over the candidate grid of the subfamily ``pos``.

    Returns ``(xs, ys, in_x, in_y)``: the distinct x_lo and y_hi ranks of the
    subfamily, and bool matrices with ``in_x[a, j]`` true iff member ``j``
    spans ``xs[a]`` horizontally (same for y). Member j contains the grid
    point (a, b) iff ``in_x[a, j] & in_y[b, j]``.
    """
    xs = np.unique(inst.x_lo[pos])
    ys = np.unique(inst.y_hi[pos])
    in_x = (inst.x_lo[pos][None, :] <= xs[:, None]) & (xs[:, None] <= inst.x_hi[pos][None, :])
    in_y = (inst.y_lo[pos][None, :] <= ys[:, None]) & (ys[:, None] <= inst.y_hi[pos][None, :])
    return xs, ys, in_x, in_y


def depth_grid(in_x: np.ndarray, in_y: np.ndarray) -> np.ndarray:
    # 0/1 float products are exact counts well below 2**53
    return in_x.astype(np.float64) @ in_y.T.astype(np.float64)
