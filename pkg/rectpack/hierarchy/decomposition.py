# Hierarchical decomposition: at each level every part S_{i-1}(u) splits into
# S_i(u0) and S_i(u1) according to how deeply the witness points of a
# rectangle are buried in the taller members of V(R) already placed in u0.
# Witness points always lie on the top side of their rectangle, so they are
# stored as x ranks; the y is y_hi(R).

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from rectpack.cliques.maximal import clique_number, max_depth
from rectpack.errors import PreconditionViolated
from rectpack.geom.instance import Instance
from rectpack.geom.rect import Point
from rectpack.utils import binary_words, ceil_log2
from rectpack.utils.workers import map_ordered

logger = logging.getLogger(__name__)


@dataclass
class DecompositionTree:
    """
    Parts S_i(w) for every level i in 0..k and binary word w of length i,
    plus the witness points P_i(R) of every rectangle at every level.

    ``parts[(i, w)]`` lists positions in processing (tallest first) order and
    ``witness_x[(i, p)]`` holds the sorted x ranks of P_i at position p.
    """
    inst: Instance
    omega: int
    k: int
    parts: Dict[Tuple[int, str], np.ndarray] = field(default_factory=dict)
    witness_x: Dict[Tuple[int, int], np.ndarray] = field(default_factory=dict)

    @property
    def sets(self) -> Dict[Tuple[int, str], Tuple[str, ...]]:
        return {key: tuple(self.inst.ids_at(pos)) for key, pos in self.parts.items()}

    @property
    def witnesses(self) -> Dict[Tuple[int, str], FrozenSet[Point]]:
        return {(i, self.inst.rects[p].id): frozenset(self.witness_points(i, p))
                for (i, p) in self.witness_x}

    def part(self, i: int, w: str) -> np.ndarray:
        return self.parts[(i, w)]

    def witness_points(self, i: int, position: int) -> List[Point]:
        y = self.inst.y_hi[position]
        return [self.inst.point_at(x, y) for x in self.witness_x[(i, position)]]

    def word_of(self, i: int, rect_id: str) -> str:
        p = self.inst.position(rect_id)
        for w in binary_words(i):
            if p in self.parts[(i, w)]:
                return w
        raise KeyError(rect_id)


def _initial_witnesses(inst: Instance, p: int) -> np.ndarray:
    """P_0: where the left and right sides of R and of V(R) meet R's top side."""
    family = np.append(np.nonzero(inst.spans[p])[0], p)
    xs = np.unique(np.concatenate([inst.x_lo[family], inst.x_hi[family]]))
    return xs[(inst.x_lo[p] <= xs) & (xs <= inst.x_hi[p])]


def _split(inst: Instance, members: np.ndarray, prev: Dict[int, np.ndarray], threshold: int):
    """Split one part; returns (low, high, new witnesses)."""
    low: List[int] = []
    high: List[int] = []
    placed_low = np.zeros(len(inst), dtype=bool)
    witnesses: Dict[int, np.ndarray] = {}
    for p in members:
        points = prev[int(p)]
        below = np.nonzero(inst.spans[p] & placed_low)[0]
        heavy = points[:0]
        if len(below) >= threshold:
            # V(R) members span R's top side, so only x decides containment
            covered = ((inst.x_lo[below][None, :] <= points[:, None])
                       & (points[:, None] <= inst.x_hi[below][None, :]))
            heavy = points[covered.sum(axis=1) >= threshold]
        if len(heavy):
            high.append(int(p))
            witnesses[int(p)] = heavy
        else:
            low.append(int(p))
            placed_low[p] = True
            witnesses[int(p)] = points
    return np.array(low, dtype=np.int64), np.array(high, dtype=np.int64), witnesses


def build_decomposition(inst: Instance) -> DecompositionTree:
    """
    Build S_i(w) and P_i(R) for i = 0..k with k = ceil(log2 w), w the clique
    number. Parts of one level are split independently of each other.

    Example:
        ```python
        inst = Instance([Rect("outer", 0, 10, 0, 10), Rect("inner", 2, 8, 2, 8)])
        tree = build_decomposition(inst)
        tree.sets[(1, "0")], tree.sets[(1, "1")]   # ("outer",), ("inner",)
        ```
    """
    if inst.has_height_ties:
        raise PreconditionViolated("decomposition needs pairwise distinct heights; perturb the instance first")
    omega = clique_number(inst)
    k = ceil_log2(omega)
    tree = DecompositionTree(inst=inst, omega=omega, k=k)
    tree.parts[(0, "")] = inst.by_height()
    for p in range(len(inst)):
        tree.witness_x[(0, p)] = _initial_witnesses(inst, p)

    for level in range(1, k + 1):
        threshold = 2 ** (k - level)
        previous = {int(p): tree.witness_x[(level - 1, int(p))] for p in range(len(inst))}
        words = binary_words(level - 1)
        splits = map_ordered(
            lambda u: _split(inst, tree.parts[(level - 1, u)], previous, threshold),
            words,
        )
        for u, (low, high, witnesses) in zip(words, splits):
            tree.parts[(level, u + "0")] = low
            tree.parts[(level, u + "1")] = high
            for p, xs in witnesses.items():
                tree.witness_x[(level, p)] = xs
    logger.debug("decomposition: n=%d omega=%d k=%d", len(inst), omega, k)
    return tree


@dataclass
class LemmaCheck:
    ok: bool
    violation: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _levels(tree: DecompositionTree):
    for i in range(tree.k + 1):
        for w in binary_words(i):
            yield i, w, tree.parts[(i, w)]


def check_tree_invariants(tree: DecompositionTree, inst: Instance) -> LemmaCheck:
    """Partition, refinement, nested non-empty witness sets on the top side."""
    n = len(inst)
    for i in range(tree.k + 1):
        seen = np.concatenate([tree.parts[(i, w)] for w in binary_words(i)]) if n else np.empty(0)
        if sorted(seen.tolist()) != list(range(n)):
            return LemmaCheck(False, f"level {i} is not a partition")
        if i < tree.k:
            for w in binary_words(i):
                children = set(tree.parts[(i + 1, w + "0")].tolist()) | set(tree.parts[(i + 1, w + "1")].tolist())
                if children != set(tree.parts[(i, w)].tolist()):
                    return LemmaCheck(False, f"S_{i}({w}) differs from the union of its children")
    for p in range(n):
        rid = inst.rects[p].id
        for i in range(tree.k + 1):
            xs = tree.witness_x[(i, p)]
            if len(xs) == 0:
                return LemmaCheck(False, f"empty witness set for {rid} at level {i}")
            if not ((inst.x_lo[p] <= xs) & (xs <= inst.x_hi[p])).all():
                return LemmaCheck(False, f"witness of {rid} at level {i} off its top side")
            if i > 0:
                before = set(tree.witness_x[(i - 1, p)].tolist())
                if not set(xs.tolist()) <= before:
                    return LemmaCheck(False, f"witness set of {rid} grew at level {i}")
                word = tree.word_of(i, rid)
                if word.endswith("0") and set(xs.tolist()) != before:
                    return LemmaCheck(False, f"witness set of {rid} changed in a low part at level {i}")
    return LemmaCheck(True)


def check_partition_lemma(tree: DecompositionTree, inst: Instance) -> LemmaCheck:
    """Every witness point of R in S_i(w) lies in fewer than 2^(k-i) members of V(R) in S_i(w)."""
    for i, w, part in _levels(tree):
        limit = 2 ** (tree.k - i)
        in_part = np.zeros(len(inst), dtype=bool)
        in_part[part] = True
        for p in part:
            others = np.nonzero(inst.spans[p] & in_part)[0]
            xs = tree.witness_x[(i, int(p))]
            depth = ((inst.x_lo[others][None, :] <= xs[:, None])
                     & (xs[:, None] <= inst.x_hi[others][None, :])).sum(axis=1)
            if len(depth) and depth.max() >= limit:
                return LemmaCheck(False, f"{inst.rects[p].id} in S_{i}({w}): witness depth {int(depth.max())} >= {limit}")
    return LemmaCheck(True)


def _inside(inst: Instance, xs: np.ndarray, y: int, q: int) -> np.ndarray:
    return ((inst.x_lo[q] <= xs) & (xs <= inst.x_hi[q])
            & (inst.y_lo[q] <= y) & (y <= inst.y_hi[q]))


def check_witness_corollary(tree: DecompositionTree, inst: Instance) -> LemmaCheck:
    """
    For R, R' in the same part with R' in X(R): every witness point p' of R'
    has a witness point of R inside R' and inside every member of V(R')
    holding p'. (The plain corollary, some witness of R inside R', follows
    because P_i(R') is never empty.)
    """
    for i, w, part in _levels(tree):
        in_part = np.zeros(len(inst), dtype=bool)
        in_part[part] = True
        for p in part:
            xs = tree.witness_x[(i, int(p))]
            y = inst.y_hi[p]
            for q in np.nonzero(inst.crossing_above[p] & in_part)[0]:
                in_q = xs[_inside(inst, xs, y, q)]
                if len(in_q) == 0:
                    return LemmaCheck(False, f"no witness of {inst.rects[p].id} inside {inst.rects[q].id} (S_{i}({w}))")
                above_q = np.nonzero(inst.spans[q])[0]
                yq = inst.y_hi[q]
                for xq in tree.witness_x[(i, int(q))]:
                    holders = [m for m in above_q if _inside(inst, np.array([xq]), yq, m)[0]]
                    ok = np.ones(len(in_q), dtype=bool)
                    for m in holders:
                        ok &= _inside(inst, in_q, y, m)
                    if not ok.any():
                        return LemmaCheck(
                            False,
                            f"witness of {inst.rects[q].id} not matched by {inst.rects[p].id} (S_{i}({w}))",
                        )
    return LemmaCheck(True)


def check_clique_lemma(tree: DecompositionTree, inst: Instance) -> LemmaCheck:
    """Cliques inside X(R) within R's part have at most 2^(k-i+1) members."""
    for i, w, part in _levels(tree):
        limit = 2 ** (tree.k - i + 1)
        in_part = np.zeros(len(inst), dtype=bool)
        in_part[part] = True
        for p in part:
            family = np.nonzero(inst.crossing_above[p] & in_part)[0]
            if len(family) > limit and max_depth(inst, family) > limit:
                return LemmaCheck(False, f"clique above {inst.rects[p].id} in S_{i}({w}) exceeds {limit}")
    return LemmaCheck(True)
