import pytest

from rectpack.geom.instance import Instance
from rectpack.geom.perturb import ensure_distinct_heights
from rectpack.geom.rect import Rect
from rectpack.instances.generators import GeneratorSpec, generate


def box(rect_id, x_lo, x_hi, y_lo, y_hi, weight=1):
    return Rect(rect_id, x_lo, x_hi, y_lo, y_hi, weight)


def random_instances(kinds, count, n_max, seed=0, n_min=1, grid=10_000, weights="unit", distinct=False):
    """Seeded instances cycling through ``kinds``, sizes n_min..n_max."""
    span = n_max - n_min + 1
    out = []
    for t in range(count):
        spec = GeneratorSpec(
            kind=kinds[t % len(kinds)],
            n=n_min + (t * 7) % span,
            seed=seed + t,
            grid=grid,
            weights=weights,
        )
        inst = generate(spec)
        out.append(ensure_distinct_heights(inst) if distinct else inst)
    return out


@pytest.fixture
def cross_pair():
    return Instance([box("wide", 0, 10, 2, 8), box("tall", 2, 8, 0, 10)])


@pytest.fixture
def nested3():
    # tallest first: outer, mid, inner
    return Instance([box("outer", -3, 3, -3, 3), box("mid", -2, 2, -2, 2), box("inner", -1, 1, -1, 1)])


@pytest.fixture
def disjoint3():
    return Instance([box("a", 0, 1, 0, 1), box("b", 2, 3, 0, 1), box("c", 4, 5, 0, 1)])


@pytest.fixture
def cross_grid():
    # r0, r1 wide; r2, r3 tall; every wide crosses every tall
    return generate(GeneratorSpec(kind="crossgrid", n=4))
