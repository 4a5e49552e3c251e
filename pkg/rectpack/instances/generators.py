# Seeded instance generators. Every kind draws from numpy's PCG64 generator in
# a fixed order, so a spec always produces the same instance.

from fractions import Fraction
from typing import List, Literal

import numpy as np
from pydantic import BaseModel, Field

from rectpack.geom.instance import Instance
from rectpack.geom.rect import Rect

GeneratorKind = Literal["uniform", "squares", "concentric", "vertical", "crossgrid"]
WeightMode = Literal["unit", "random"]


class GeneratorSpec(BaseModel):
    kind: GeneratorKind
    n: int = Field(ge=0)
    seed: int = Field(default=0, ge=0)
    grid: int = Field(default=10_000, ge=2)
    weights: WeightMode = "unit"


def _interval(rng: np.random.Generator, grid: int):
    lo, hi = sorted(int(v) for v in rng.integers(0, grid + 1, size=2))
    if lo == hi:
        # repair a degenerate draw without leaving the grid
        if hi < grid:
            hi += 1
        else:
            lo -= 1
    return lo, hi


def _uniform(rng, spec: GeneratorSpec):
    for _ in range(spec.n):
        x_lo, x_hi = _interval(rng, spec.grid)
        y_lo, y_hi = _interval(rng, spec.grid)
        yield x_lo, x_hi, y_lo, y_hi


def _squares(rng, spec: GeneratorSpec):
    largest = max(2, spec.grid // 4)
    for _ in range(spec.n):
        side = int(rng.integers(1, largest + 1))
        x = int(rng.integers(0, max(spec.grid - side, 0) + 1))
        y = int(rng.integers(0, max(spec.grid - side, 0) + 1))
        yield x, x + side, y, y + side


def _concentric(rng, spec: GeneratorSpec):
    center = Fraction(spec.grid, 2)
    for _ in range(spec.n):
        half_x = int(rng.integers(1, spec.grid // 2 + 1))
        half_y = int(rng.integers(1, spec.grid // 2 + 1))
        yield center - half_x, center + half_x, center - half_y, center + half_y


def _vertical(rng, spec: GeneratorSpec):
    for j in range(spec.n):
        x_lo, x_hi = _interval(rng, spec.grid)
        yield x_lo, x_hi, -j, spec.grid + j


def _crossgrid(rng, spec: GeneratorSpec):
    wide = (spec.n + 1) // 2
    tall = spec.n // 2
    for i in range(wide):
        yield 0, 2 * tall + 1, 2 * i + 1, 2 * i + 2
    for j in range(tall):
        yield 2 * j + 1, 2 * j + 2, 0, 2 * wide + 1


_KINDS = {
    "uniform": _uniform,
    "squares": _squares,
    "concentric": _concentric,
    "vertical": _vertical,
    "crossgrid": _crossgrid,
}


def generate(spec: GeneratorSpec) -> Instance:
    """
    Build an instance from a generator spec.

    - uniform: corners drawn from {0..grid}^2.
    - squares: squares of side 1..grid/4.
    - concentric: all centered at (grid/2, grid/2), so every intersecting pair
      crosses or nests.
    - vertical: rectangle j spans [-j, grid + j] vertically, so every
      intersection is vertical.
    - crossgrid: ceil(n/2) disjoint wide bars crossed by floor(n/2) disjoint
      tall bars.

    Example:
        ```python
        inst = generate(GeneratorSpec(kind="crossgrid", n=4))
        clique_number(inst)   # 2
        ```
    """
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    boxes = list(_KINDS[spec.kind](rng, spec))
    if spec.weights == "random":
        weights: List[int] = [int(w) for w in rng.integers(1, 101, size=len(boxes))]
    else:
        weights = [1] * len(boxes)
    return Instance(
        Rect(f"r{j}", x_lo, x_hi, y_lo, y_hi, weight)
        for j, ((x_lo, x_hi, y_lo, y_hi), weight) in enumerate(zip(boxes, weights))
    )
