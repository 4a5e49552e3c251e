# Smallest-last (degeneracy) ordering and greedy coloring, plus the
# corner-only wrapper on top of it.

import logging
from typing import Dict, List, Tuple

import numpy as np

from rectpack.cliques.maximal import max_depth
from rectpack.coloring.types import Coloring, first_pair
from rectpack.errors import PreconditionViolated
from rectpack.geom.instance import Instance, Members

logger = logging.getLogger(__name__)


def degeneracy_order(adj: np.ndarray) -> Tuple[List[int], int]:
    """
    Removal order of the smallest-last procedure on a local adjacency matrix.

    Each step removes a vertex of minimum remaining degree; ties go to the
    lowest index. Returns the removal order and the degeneracy (largest degree
    seen at removal).
    """
    m = len(adj)
    degree = adj.sum(axis=1).astype(np.int64)
    removed = np.zeros(m, dtype=bool)
    order = []
    degeneracy = 0
    for _ in range(m):
        masked = np.where(removed, np.iinfo(np.int64).max, degree)
        v = int(np.argmin(masked))
        degeneracy = max(degeneracy, int(degree[v]))
        order.append(v)
        removed[v] = True
        degree -= adj[v].astype(np.int64)
    return order, degeneracy


def greedy_in_order(adj: np.ndarray, order: List[int]) -> Dict[int, int]:
    colors: Dict[int, int] = {}
    for v in order:
        used = {colors[u] for u in np.nonzero(adj[v])[0] if u in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def degeneracy_greedy(inst: Instance, members: Members = None) -> Coloring:
    """
    Color ``members`` greedily in reverse smallest-last order.

    Uses at most 1 + degeneracy colors. On an s-sparse family with clique
    number w that is at most max((2s + 4)(w - 1), 1).

    Example:
        ```python
        inst = Instance([Rect("a", 0, 2, 0, 1), Rect("b", 1, 4, 0, 1), Rect("c", 3, 5, 0, 1)])
        degeneracy_greedy(inst).num_colors   # 2
        ```
    """
    pos = inst.positions(members)
    adj = inst.adjacency[np.ix_(pos, pos)]
    order, degeneracy = degeneracy_order(adj)
    local = greedy_in_order(adj, list(reversed(order)))
    return Coloring.from_positions(
        inst,
        {int(pos[v]): c for v, c in local.items()},
        "degeneracy",
        degeneracy=degeneracy,
    )


def corner_coloring(inst: Instance, members: Members = None) -> Coloring:
    """Degeneracy coloring of a family without crossing pairs."""
    pos = inst.positions(members)
    pair = first_pair(inst.crossing, pos)
    if pair is not None:
        ids = tuple(inst.ids_at(pair))
        raise PreconditionViolated(f"crossing pair {ids[0]}/{ids[1]} in a corner-only family", pair=ids)
    coloring = degeneracy_greedy(inst, pos)
    coloring.algorithm = "corner"
    bound = max(4 * (max_depth(inst, pos) - 1), 1) if len(pos) else 0
    coloring.stats["bound"] = bound
    return coloring
