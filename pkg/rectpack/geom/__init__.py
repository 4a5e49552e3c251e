from rectpack.geom.instance import Instance, crossing_set, vertical_set
from rectpack.geom.perturb import ensure_distinct_heights, perturb
from rectpack.geom.rect import (
    IntersectionKind,
    IntersectionType,
    Point,
    Rect,
    classify,
    contains_corner,
    intersects,
    spans_vertically,
)
from rectpack.geom.scalar import Scalar, format_scalar, to_scalar

__all__ = [
    "Instance",
    "IntersectionKind",
    "IntersectionType",
    "Point",
    "Rect",
    "Scalar",
    "classify",
    "contains_corner",
    "crossing_set",
    "ensure_distinct_heights",
    "format_scalar",
    "intersects",
    "perturb",
    "spans_vertically",
    "to_scalar",
    "vertical_set",
]
