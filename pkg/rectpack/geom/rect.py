# Rectangles, points and the pairwise intersection predicates.

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Tuple

from rectpack.errors import ValidationError
from rectpack.geom.scalar import to_scalar


class Point(NamedTuple):
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class Rect:
    """
    A closed axis-parallel rectangle [x_lo, x_hi] x [y_lo, y_hi].

    Example:
        ```python
        rect = Rect("a", "0", "4", "1/2", "3", weight="2")
        rect.height   # Fraction(5, 2)
        ```
    """
    id: str
    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction
    y_hi: Fraction
    weight: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        for name in ("x_lo", "x_hi", "y_lo", "y_hi", "weight"):
            object.__setattr__(self, name, to_scalar(getattr(self, name)))
        object.__setattr__(self, "id", str(self.id))
        if not self.x_lo < self.x_hi:
            raise ValidationError(f"rectangle {self.id}: x_lo must be < x_hi", rect_id=self.id)
        if not self.y_lo < self.y_hi:
            raise ValidationError(f"rectangle {self.id}: y_lo must be < y_hi", rect_id=self.id)
        if self.weight < 0:
            raise ValidationError(f"rectangle {self.id}: negative weight", rect_id=self.id)

    @property
    def width(self) -> Fraction:
        return self.x_hi - self.x_lo

    @property
    def height(self) -> Fraction:
        return self.y_hi - self.y_lo

    def corners(self) -> Tuple[Point, Point, Point, Point]:
        return (
            Point(self.x_lo, self.y_lo),
            Point(self.x_hi, self.y_lo),
            Point(self.x_lo, self.y_hi),
            Point(self.x_hi, self.y_hi),
        )

    def contains_point(self, p: Point) -> bool:
        return self.x_lo <= p.x <= self.x_hi and self.y_lo <= p.y <= self.y_hi

    def contains_rect(self, other: "Rect") -> bool:
        return (self.x_lo <= other.x_lo and other.x_hi <= self.x_hi
                and self.y_lo <= other.y_lo and other.y_hi <= self.y_hi)


class IntersectionType(Enum):
    DISJOINT = "disjoint"
    CROSSING = "crossing"
    CORNER = "corner"
    CONTAINMENT = "containment"


@dataclass(frozen=True)
class IntersectionKind:
    kind: IntersectionType
    vertical: bool = False


def _x_overlap(a: Rect, b: Rect) -> bool:
    return a.x_lo <= b.x_hi and b.x_lo <= a.x_hi


def intersects(a: Rect, b: Rect) -> bool:
    """True iff the closed rectangles share a point; touching boundaries count."""
    return _x_overlap(a, b) and a.y_lo <= b.y_hi and b.y_lo <= a.y_hi


def spans_vertically(a: Rect, b: Rect) -> bool:
    """True iff ``a`` meets both the top and the bottom side of ``b``."""
    return _x_overlap(a, b) and a.y_lo <= b.y_lo and b.y_hi <= a.y_hi


def contains_corner(a: Rect, b: Rect) -> bool:
    """True iff ``a`` contains at least one corner of ``b``."""
    return any(a.contains_point(c) for c in b.corners())


def classify(a: Rect, b: Rect) -> IntersectionKind:
    """
    Classify how two rectangles intersect.

    Containment is reported on its own even though it is a corner intersection;
    crossing means they meet but neither holds a corner of the other.

    Example:
        ```python
        classify(Rect("a", 0, 10, 2, 8), Rect("b", 2, 8, 0, 10))
        # IntersectionKind(kind=IntersectionType.CROSSING, vertical=True)
        ```
    """
    if not intersects(a, b):
        return IntersectionKind(IntersectionType.DISJOINT, False)
    vertical = spans_vertically(a, b) or spans_vertically(b, a)
    if a.contains_rect(b) or b.contains_rect(a):
        kind = IntersectionType.CONTAINMENT
    elif contains_corner(a, b) or contains_corner(b, a):
        kind = IntersectionType.CORNER
    else:
        kind = IntersectionType.CROSSING
    return IntersectionKind(kind, vertical)
