# The full O(w log w) pipeline: peel the covered rectangles of every part,
# level by level, each peeled family on its own palette; finish the leaves
# of the tree with the crossing-level coloring.

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np

from rectpack.coloring.agb import agb_coloring
from rectpack.coloring.greedy import degeneracy_greedy
from rectpack.coloring.types import Coloring
from rectpack.errors import InternalBoundExceeded
from rectpack.geom.instance import Instance
from rectpack.hierarchy.decomposition import DecompositionTree, build_decomposition
from rectpack.hierarchy.reduction import covered_positions
from rectpack.utils import binary_words
from rectpack.utils.workers import map_ordered

logger = logging.getLogger(__name__)

# 4 * 8 * 7: crossing-level coloring of a family with clique number <= 8
LEAF_CAP = 224


def round_cap(k: int, i: int) -> int:
    """Palette width for a peeled family at level i: (2*3 + 4)(2^(k-i+4) - 1)."""
    return max(10 * (2 ** (k - i + 4) - 1), 1)


def color_bound(k: int) -> int:
    return 2 ** k * (160 * k + LEAF_CAP)


@dataclass
class CellReport:
    label: str
    size: int
    colors: int
    cap: int
    offset: int


@dataclass
class HierarchyReport:
    n: int
    omega: int
    k: int
    bound: int
    cells: List[CellReport] = field(default_factory=list)

    @property
    def peeled(self) -> int:
        return sum(c.size for c in self.cells if c.label.startswith("T"))

    def as_rows(self) -> List[Tuple[Any, ...]]:
        return [(c.label, c.size, c.colors, c.cap, c.offset) for c in self.cells]


def hierarchical_coloring_with_report(inst: Instance) -> Tuple[Coloring, HierarchyReport]:
    tree = build_decomposition(inst)
    k = tree.k
    report = HierarchyReport(n=len(inst), omega=tree.omega, k=k, bound=color_bound(k))
    alive = np.ones(len(inst), dtype=bool)
    assignment: Dict[int, int] = {}
    offsets: Dict[str, int] = {}
    offset = 0

    def place(label: str, coloring: Coloring, cap: int, size: int):
        nonlocal offset
        if coloring.num_colors > cap:
            raise InternalBoundExceeded(f"cell {label} used {coloring.num_colors} colors, cap {cap}")
        for rect_id, c in coloring.colors.items():
            assignment[inst.position(rect_id)] = offset + c
        offsets[label] = offset
        report.cells.append(CellReport(label, size, coloring.num_colors, cap, offset))
        offset += cap

    for i in range(1, k + 1):
        cap = round_cap(k, i)
        words = binary_words(i)
        covered = map_ordered(lambda w: covered_positions(tree, inst, i, w), words)
        removed = []
        for w, found in zip(words, covered):
            peeled = np.array(sorted(p for p in found if alive[p]), dtype=np.int64)
            if len(peeled) == 0:
                continue
            place(f"T{i}:{w}", degeneracy_greedy(inst, peeled), cap, len(peeled))
            removed.extend(peeled.tolist())
        alive[np.array(removed, dtype=np.int64)] = False
        logger.debug("round %d peeled %d rectangles", i, len(removed))

    leaves = binary_words(k)
    cells = [np.array(sorted(p for p in tree.parts[(k, w)] if alive[p]), dtype=np.int64) for w in leaves]
    colored = map_ordered(lambda cell: agb_coloring(inst, cell), cells)
    for w, cell, coloring in zip(leaves, cells, colored):
        if len(cell):
            place(f"S{k}:{w}", coloring, LEAF_CAP, len(cell))

    coloring = Coloring.from_positions(inst, assignment, "hier", offsets, omega=tree.omega, k=k)
    if coloring.num_colors > report.bound:
        raise InternalBoundExceeded(f"{coloring.num_colors} colors above the bound {report.bound}")
    return coloring, report


def hierarchical_coloring(inst: Instance) -> Coloring:
    """
    Proper coloring with at most 2^k (160k + 224) colors, k = ceil(log2 w).

    Palettes are contiguous and allocated round by round, words in
    lexicographic order, only for non-empty cells.

    Example:
        ```python
        inst = ensure_distinct_heights(load("instance.json"))
        coloring = hierarchical_coloring(inst)
        validate_coloring(inst, coloring).ok   # True
        ```
    """
    coloring, _ = hierarchical_coloring_with_report(inst)
    return coloring


def hierarchy_report(inst: Instance) -> HierarchyReport:
    _, report = hierarchical_coloring_with_report(inst)
    return report
