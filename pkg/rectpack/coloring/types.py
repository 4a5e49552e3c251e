from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Tuple

import numpy as np

from rectpack.geom.instance import Instance
from rectpack.geom.rect import Point


@dataclass
class Coloring:
    """
    A color index (0-based) per rectangle id.

    ``num_colors`` is 1 + the largest index used, so palettes that leave gaps
    still count them. ``palette_offsets`` maps a cell label to the first index
    of the palette it was given; ``stats`` carries per-algorithm numbers that
    reports print.
    """
    colors: Dict[str, int]
    num_colors: int
    algorithm: str
    palette_offsets: Optional[Dict[str, int]] = None
    stats: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_positions(
        cls,
        inst: Instance,
        assignment: Mapping[int, int],
        algorithm: str,
        palette_offsets: Optional[Dict[str, int]] = None,
        **stats: Any,
    ) -> "Coloring":
        colors = {inst.rects[p].id: int(c) for p, c in sorted(assignment.items())}
        num_colors = 1 + max(colors.values()) if colors else 0
        return cls(colors, num_colors, algorithm, palette_offsets, dict(stats))

    def __len__(self) -> int:
        return len(self.colors)

    def color_of(self, rect_id: str) -> int:
        return self.colors[rect_id]

    def classes(self) -> Dict[int, List[str]]:
        """Color index -> ids, both ascending by first appearance."""
        out: Dict[int, List[str]] = {}
        for rect_id, c in self.colors.items():
            out.setdefault(c, []).append(rect_id)
        return dict(sorted(out.items()))

    def used_colors(self) -> int:
        return len(set(self.colors.values()))

    def shifted(self, offset: int) -> Dict[str, int]:
        return {rect_id: c + offset for rect_id, c in self.colors.items()}


@dataclass
class SparseCertificate:
    """
    Up to s points inside each rectangle such that every crossing pair of the
    certified family has one of its listed points in the intersection.
    """
    points: Dict[str, List[Point]] = field(default_factory=dict)

    @property
    def s(self) -> int:
        return max((len(p) for p in self.points.values()), default=0)

    def first_violation(self, inst: Instance) -> Optional[Tuple[str, str]]:
        """First crossing pair (instance order) with no certified point in common."""
        ids = [rect_id for rect_id in inst.ids if rect_id in self.points]
        pos = inst.positions(ids)
        for a_idx, a in enumerate(pos):
            for b in pos[a_idx + 1:]:
                if not inst.crossing[a, b]:
                    continue
                ra, rb = inst.rects[a], inst.rects[b]
                candidates = self.points[ra.id] + self.points[rb.id]
                if not any(ra.contains_point(p) and rb.contains_point(p) for p in candidates):
                    return ra.id, rb.id
        return None


@dataclass
class WarmupLevels:
    level_of: Dict[str, int] = field(default_factory=dict)
    witness_clique: Dict[str, FrozenSet[str]] = field(default_factory=dict)
    witness_point: Dict[str, Point] = field(default_factory=dict)

    @property
    def num_levels(self) -> int:
        return max(self.level_of.values(), default=0)

    def level(self, i: int) -> List[str]:
        return [rect_id for rect_id, lv in self.level_of.items() if lv == i]


def first_pair(mask: np.ndarray, pos: np.ndarray) -> Optional[Tuple[int, int]]:
    """First (a, b), a < b in position order, with ``mask[a, b]`` set."""
    sub = np.triu(mask[np.ix_(pos, pos)], k=1)
    hits = np.argwhere(sub)
    if len(hits) == 0:
        return None
    a, b = hits[0]
    return int(pos[a]), int(pos[b])
