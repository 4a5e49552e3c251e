from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Tuple, Union

import numpy as np

from rectpack.coloring.types import Coloring
from rectpack.errors import MissingAssignment
from rectpack.geom.instance import Instance


@dataclass(frozen=True)
class Verdict:
    ok: bool
    pair: Optional[Tuple[str, str]] = None

    def __bool__(self) -> bool:
        return self.ok


def _first_conflict(inst: Instance, mask: np.ndarray) -> Verdict:
    hits = np.argwhere(np.triu(mask, k=1))
    if len(hits) == 0:
        return Verdict(True)
    a, b = hits[0]
    return Verdict(False, (inst.rects[a].id, inst.rects[b].id))


def validate_coloring(inst: Instance, coloring: Union[Coloring, Mapping[str, int]]) -> Verdict:
    """ok iff no two intersecting rectangles share a color."""
    colors = coloring.colors if isinstance(coloring, Coloring) else coloring
    missing = [rect_id for rect_id in inst.ids if rect_id not in colors]
    if missing:
        raise MissingAssignment(f"no color for {missing[0]!r}" + (f" and {len(missing) - 1} more" if len(missing) > 1 else ""))
    values = np.array([colors[rect_id] for rect_id in inst.ids], dtype=np.int64)
    return _first_conflict(inst, inst.adjacency & (values[:, None] == values[None, :]))


def validate_independent(inst: Instance, ids: Iterable[str]) -> Verdict:
    """ok iff the given rectangles are pairwise disjoint; unknown ids raise."""
    chosen = np.zeros(len(inst), dtype=bool)
    chosen[inst.positions(list(ids))] = True
    return _first_conflict(inst, inst.adjacency & chosen[:, None] & chosen[None, :])
