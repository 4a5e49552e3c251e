# Clique number and the inclusion-maximal clique family.

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np

from rectpack.cliques.points import depth_grid, point_grid
from rectpack.geom.instance import Instance, Members
from rectpack.geom.rect import Point

logger = logging.getLogger(__name__)

# rows per block when testing set inclusion between distinct cliques
_BLOCK = 512


@dataclass
class CliqueList:
    """
    Distinct inclusion-maximal cliques, each with a common point.

    ``members`` holds instance positions (ascending) for internal use;
    ``cliques`` holds the same sets as ids.
    """
    cliques: List[FrozenSet[str]] = field(default_factory=list)
    points: List[Point] = field(default_factory=list)
    members: List[Tuple[int, ...]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self) -> Iterator[FrozenSet[str]]:
        return iter(self.cliques)

    def containing(self, position: int) -> List[int]:
        """Indices of the cliques that hold the rectangle at ``position``."""
        return [c for c, members in enumerate(self.members) if position in members]


def max_depth(inst: Instance, members: Members = None) -> int:
    """Largest number of ``members`` sharing a point, i.e. their clique number."""
    pos = inst.positions(members)
    if len(pos) == 0:
        return 0
    _, _, in_x, in_y = point_grid(inst, pos)
    return int(depth_grid(in_x, in_y).max())


def clique_number(inst: Instance) -> int:
    """
    Clique number of the intersection graph.

    Example:
        ```python
        nested = Instance([Rect(str(i), -i, i, -i, i) for i in (1, 2, 3)])
        clique_number(nested)   # 3
        ```
    """
    return max_depth(inst, None)


def maximal_cliques(inst: Instance) -> CliqueList:
    """
    Containing sets at every candidate point, deduplicated, then filtered to
    the inclusion-maximal ones. Order follows the first candidate point
    (x ascending, then y ascending) realizing each clique.
    """
    pos = inst.positions(None)
    if len(pos) == 0:
        return CliqueList()
    xs, ys, in_x, in_y = point_grid(inst, pos)

    seen = {}
    rows: List[np.ndarray] = []
    where: List[Tuple[int, int]] = []
    for a in range(len(xs)):
        grid = in_x[a][None, :] & in_y
        for b in np.nonzero(grid.any(axis=1))[0]:
            key = np.packbits(grid[b]).tobytes()
            if key in seen:
                continue
            seen[key] = len(rows)
            rows.append(grid[b])
            where.append((xs[a], ys[b]))

    sets = np.array(rows)
    as_float = sets.astype(np.float32)
    outside = (~sets).astype(np.float32)
    dominated = np.zeros(len(sets), dtype=bool)
    for start in range(0, len(sets), _BLOCK):
        block = as_float[start:start + _BLOCK]
        # subset[i, j]: set i has no member outside set j
        subset = (block @ outside.T) == 0
        for offset in range(len(block)):
            subset[offset, start + offset] = False
        # the sets are distinct, so any subset relation is proper
        dominated[start:start + _BLOCK] = subset.any(axis=1)

    result = CliqueList()
    for c in np.nonzero(~dominated)[0]:
        members = tuple(int(p) for p in np.nonzero(sets[c])[0])
        result.members.append(members)
        result.cliques.append(frozenset(inst.ids_at(members)))
        result.points.append(inst.point_at(*where[c]))
    logger.debug("%d candidate cliques, %d maximal", len(sets), len(result))
    return result
