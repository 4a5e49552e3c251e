# Clique reduction: the rectangles of a part that are alpha-covered inside it
# form a 3-sparse family, and removing them caps the clique number of what
# remains.

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple, Union

import numpy as np

from rectpack.cliques.maximal import max_depth
from rectpack.coloring.types import SparseCertificate
from rectpack.errors import CertificateInvalid
from rectpack.geom.instance import Instance, Members
from rectpack.geom.rect import Point, Rect
from rectpack.hierarchy.decomposition import DecompositionTree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoveringWitness:
    """A common point of a clique holding ``covered`` whose members reach past
    its top side (``top_hits``) and past its bottom side (``bottom_hits``)."""
    covered: str
    center: Point
    top_hits: FrozenSet[str]
    bottom_hits: FrozenSet[str]


def _covering(inst: Instance, family: np.ndarray, r: int, alpha: int):
    """Raw search on positions; returns (x rank, y rank, top, bottom) or None."""
    in_family = np.zeros(len(inst), dtype=bool)
    in_family[family] = True
    nb = np.nonzero(inst.adjacency[r] & in_family)[0]
    if len(nb) < alpha:
        return None
    group = np.append(nb, r)
    xs = np.unique(inst.x_lo[group])
    xs = xs[(inst.x_lo[r] <= xs) & (xs <= inst.x_hi[r])]
    ys = np.unique(inst.y_hi[group])
    ys = ys[(inst.y_lo[r] <= ys) & (ys <= inst.y_hi[r])]
    in_x = (inst.x_lo[nb][None, :] <= xs[:, None]) & (xs[:, None] <= inst.x_hi[nb][None, :])
    in_y = (inst.y_lo[nb][None, :] <= ys[:, None]) & (ys[:, None] <= inst.y_hi[nb][None, :])
    top = inst.y_hi[nb] >= inst.y_hi[r]
    bottom = inst.y_lo[nb] <= inst.y_lo[r]
    top_count = (in_x & top).astype(np.float64) @ in_y.T.astype(np.float64)
    bottom_count = (in_x & bottom).astype(np.float64) @ in_y.T.astype(np.float64)
    hits = np.argwhere((top_count >= alpha) & (bottom_count >= alpha))
    if len(hits) == 0:
        return None
    a, b = hits[0]
    at = in_x[a] & in_y[b]
    return int(xs[a]), int(ys[b]), nb[at & top], nb[at & bottom]


def _witness(inst: Instance, r: int, raw) -> CoveringWitness:
    x, y, top, bottom = raw
    return CoveringWitness(
        covered=inst.rects[r].id,
        center=inst.point_at(x, y),
        top_hits=frozenset(inst.ids_at(top)),
        bottom_hits=frozenset(inst.ids_at(bottom)),
    )


def alpha_covering(
    inst: Instance,
    family: Members,
    rect: Union[Rect, str],
    alpha: int,
) -> Optional[CoveringWitness]:
    """
    Look for a clique in ``family`` holding ``rect`` with at least ``alpha``
    other members meeting its top side and ``alpha`` meeting its bottom side.

    Probes the points (x_lo, y_hi) of the closed neighborhood that fall inside
    ``rect``, x first, and returns the first one that works.
    """
    r = inst.position(rect.id if isinstance(rect, Rect) else rect)
    raw = _covering(inst, inst.positions(family), r, alpha)
    return None if raw is None else _witness(inst, r, raw)


def alpha_for(tree: DecompositionTree, i: int) -> int:
    return 2 ** (tree.k - i + 2)


def covered_positions(tree: DecompositionTree, inst: Instance, i: int, w: str) -> Dict[int, tuple]:
    part = tree.parts[(i, w)]
    alpha = alpha_for(tree, i)
    found: Dict[int, tuple] = {}
    if len(part) <= alpha:
        return found
    for r in part:
        raw = _covering(inst, part, int(r), alpha)
        if raw is not None:
            found[int(r)] = raw
    return found


def compute_T(
    tree: DecompositionTree, inst: Instance, i: int, w: str
) -> Tuple[FrozenSet[str], Dict[str, CoveringWitness]]:
    """
    T_i(w): members of S_i(w) that admit a 2^(k-i+2)-covering inside S_i(w),
    each with its witness.
    """
    found = covered_positions(tree, inst, i, w)
    witnesses = {inst.rects[r].id: _witness(inst, r, raw) for r, raw in found.items()}
    return frozenset(witnesses), witnesses


def residual_clique_bound(tree: DecompositionTree, inst: Instance, i: int, w: str) -> Tuple[int, int]:
    """(clique number of S_i(w) minus T_i(w), the bound 2^(k-i+3))."""
    found = covered_positions(tree, inst, i, w)
    rest = np.array([p for p in tree.parts[(i, w)] if int(p) not in found], dtype=np.int64)
    return max_depth(inst, rest), 2 ** (tree.k - i + 3)


def sparse_certificate(
    tree: DecompositionTree,
    inst: Instance,
    i: int,
    w: str,
    T: Iterable[str],
    witnesses: Dict[str, CoveringWitness],
) -> SparseCertificate:
    """
    Three points per covered rectangle: its leftmost and rightmost witness
    points at level i and the center of its covering. Every crossing pair of
    T then shares one of the six points.
    """
    cert = SparseCertificate()
    for rect_id in sorted(T, key=inst.position):
        p = inst.position(rect_id)
        top = tree.witness_points(i, p)
        cert.points[rect_id] = [top[0], top[-1], witnesses[rect_id].center]
    pair = cert.first_violation(inst)
    if pair is not None:
        raise CertificateInvalid(f"pair {pair[0]}/{pair[1]} shares no certified point", pair=pair)
    return cert
