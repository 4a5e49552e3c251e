# An ordered family of rectangles plus the cached, vectorized relations the
# algorithms need. Coordinates are compressed to integer ranks so every
# predicate (all of them are comparisons) runs exactly on numpy int arrays.

import logging
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Set, Union

import numpy as np

from rectpack.errors import UnknownId, ValidationError
from rectpack.geom.rect import Point, Rect

logger = logging.getLogger(__name__)

Members = Union[None, np.ndarray, Iterable[Union[Rect, str]]]


class Instance:
    """
    An ordered collection of rectangles with unique ids.

    Ties anywhere in the package are broken by position in this order.
    ``origins`` maps every id to the id of the rectangle it was copied from
    (itself for ordinary instances); multiset expansion fills it in.

    Relation matrices (n x n, bool, zero diagonal):

    - ``adjacency[i, j]``: the rectangles intersect.
    - ``spans[i, j]``: j meets the top and bottom sides of i, i.e. j is in V(i).
    - ``contains[i, j]``: i contains j.
    - ``corner[i, j]``: i contains a corner of j.
    - ``crossing[i, j]``: they intersect and neither holds a corner of the other.
    - ``crossing_above[i, j]``: j is in V(i) and crosses i, i.e. j is in X(i).
    """

    def __init__(
        self,
        rects: Iterable[Rect],
        perturbed: bool = False,
        origins: Optional[Mapping[str, str]] = None,
    ):
        self.rects: tuple = tuple(rects)
        self.index: Dict[str, int] = {}
        for pos, rect in enumerate(self.rects):
            if rect.id in self.index:
                raise ValidationError(f"duplicate rectangle id {rect.id!r}", rect_id=rect.id)
            self.index[rect.id] = pos
        self.perturbed = perturbed
        origins = dict(origins) if origins else {}
        self.origins: Dict[str, str] = {r.id: origins.get(r.id, r.id) for r in self.rects}
        self._build_ranks()

    def _build_ranks(self):
        xs = sorted({v for r in self.rects for v in (r.x_lo, r.x_hi)})
        ys = sorted({v for r in self.rects for v in (r.y_lo, r.y_hi)})
        self.x_values: List[Fraction] = xs
        self.y_values: List[Fraction] = ys
        x_rank = {v: i for i, v in enumerate(xs)}
        y_rank = {v: i for i, v in enumerate(ys)}
        self.x_lo = np.array([x_rank[r.x_lo] for r in self.rects], dtype=np.int64)
        self.x_hi = np.array([x_rank[r.x_hi] for r in self.rects], dtype=np.int64)
        self.y_lo = np.array([y_rank[r.y_lo] for r in self.rects], dtype=np.int64)
        self.y_hi = np.array([y_rank[r.y_hi] for r in self.rects], dtype=np.int64)

    def __len__(self) -> int:
        return len(self.rects)

    def __iter__(self) -> Iterator[Rect]:
        return iter(self.rects)

    def __getitem__(self, rect_id: str) -> Rect:
        return self.rects[self.position(rect_id)]

    def __contains__(self, rect_id: str) -> bool:
        return rect_id in self.index

    def __repr__(self) -> str:
        return f"Instance(n={len(self)}, perturbed={self.perturbed})"

    @property
    def ids(self) -> List[str]:
        return [r.id for r in self.rects]

    def position(self, rect_id: str) -> int:
        try:
            return self.index[rect_id]
        except KeyError:
            raise UnknownId(f"unknown rectangle id {rect_id!r}") from None

    def positions(self, members: Members = None) -> np.ndarray:
        """Sorted positions of ``members`` (all rectangles for None)."""
        if members is None:
            return np.arange(len(self), dtype=np.int64)
        if isinstance(members, np.ndarray):
            return np.unique(members.astype(np.int64))
        pos = {self.position(m.id if isinstance(m, Rect) else m) for m in members}
        return np.array(sorted(pos), dtype=np.int64)

    def ids_at(self, positions: Iterable[int]) -> List[str]:
        return [self.rects[int(p)].id for p in positions]

    def point_at(self, x_rank: int, y_rank: int) -> Point:
        return Point(self.x_values[int(x_rank)], self.y_values[int(y_rank)])

    # heights

    @cached_property
    def heights(self) -> List[Fraction]:
        return [r.height for r in self.rects]

    @cached_property
    def height_rank(self) -> np.ndarray:
        """0 for the tallest rectangle; equal heights ordered by position."""
        order = sorted(range(len(self)), key=lambda i: (-self.heights[i], i))
        rank = np.empty(len(self), dtype=np.int64)
        rank[order] = np.arange(len(self))
        return rank

    @property
    def has_height_ties(self) -> bool:
        return len(set(self.heights)) != len(self.heights)

    def by_height(self, positions: Optional[np.ndarray] = None) -> np.ndarray:
        """``positions`` ordered tallest first."""
        positions = self.positions(None) if positions is None else positions
        return positions[np.argsort(self.height_rank[positions], kind="stable")]

    # relations

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = ((self.x_lo[:, None] <= self.x_hi[None, :]) & (self.x_lo[None, :] <= self.x_hi[:, None])
             & (self.y_lo[:, None] <= self.y_hi[None, :]) & (self.y_lo[None, :] <= self.y_hi[:, None]))
        np.fill_diagonal(a, False)
        return a

    @cached_property
    def spans(self) -> np.ndarray:
        s = (self.adjacency
             & (self.y_lo[None, :] <= self.y_lo[:, None])
             & (self.y_hi[None, :] >= self.y_hi[:, None]))
        return s

    @cached_property
    def contains(self) -> np.ndarray:
        c = ((self.x_lo[:, None] <= self.x_lo[None, :]) & (self.x_hi[None, :] <= self.x_hi[:, None])
             & (self.y_lo[:, None] <= self.y_lo[None, :]) & (self.y_hi[None, :] <= self.y_hi[:, None]))
        np.fill_diagonal(c, False)
        return c

    @cached_property
    def corner(self) -> np.ndarray:
        def inside(lo, hi, v):
            return (lo[:, None] <= v[None, :]) & (v[None, :] <= hi[:, None])

        x_in = inside(self.x_lo, self.x_hi, self.x_lo) | inside(self.x_lo, self.x_hi, self.x_hi)
        y_in = inside(self.y_lo, self.y_hi, self.y_lo) | inside(self.y_lo, self.y_hi, self.y_hi)
        # (x_lo or x_hi inside) and (y_lo or y_hi inside) iff some corner inside
        c = x_in & y_in
        np.fill_diagonal(c, False)
        return c

    @cached_property
    def crossing(self) -> np.ndarray:
        return self.adjacency & ~self.corner & ~self.corner.T

    @cached_property
    def crossing_above(self) -> np.ndarray:
        return self.spans & self.crossing

    @cached_property
    def vertical(self) -> np.ndarray:
        """Symmetric: the pair is a vertical intersection."""
        return self.spans | self.spans.T

    # queries by rectangle

    def adjacent(self, a: str, b: str) -> bool:
        return bool(self.adjacency[self.position(a), self.position(b)])

    def neighbors(self, rect_id: str) -> Set[Rect]:
        return {self.rects[j] for j in np.nonzero(self.adjacency[self.position(rect_id)])[0]}

    def subset(self, members: Members) -> "Instance":
        """A new instance holding only ``members``, in instance order."""
        pos = self.positions(members)
        chosen = [self.rects[p] for p in pos]
        return Instance(chosen, perturbed=self.perturbed, origins=self.origins)


def vertical_set(inst: Instance, rect: Union[Rect, str]) -> Set[Rect]:
    """V(R): rectangles other than R meeting both its top and bottom sides."""
    i = inst.position(rect.id if isinstance(rect, Rect) else rect)
    return {inst.rects[j] for j in np.nonzero(inst.spans[i])[0]}


def crossing_set(inst: Instance, rect: Union[Rect, str]) -> Set[Rect]:
    """X(R): the members of V(R) that cross R."""
    i = inst.position(rect.id if isinstance(rect, Rect) else rect)
    return {inst.rects[j] for j in np.nonzero(inst.crossing_above[i])[0]}
