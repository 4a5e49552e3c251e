# Symmetric vertical stretching that breaks height ties without changing the
# intersection graph or any intersection type.

import logging
from dataclasses import replace
from fractions import Fraction

from rectpack.geom.instance import Instance

logger = logging.getLogger(__name__)


def _min_gap(values) -> Fraction:
    ordered = sorted(set(values))
    gaps = [b - a for a, b in zip(ordered, ordered[1:])]
    return min(gaps) if gaps else Fraction(1)


def perturb(inst: Instance) -> Instance:
    """
    Stretch the i-th rectangle (1-based) by i*delta above and below.

    delta = g / (8 (n + 1)) where g is the smallest positive gap among all
    y-coordinates and heights. Every shift stays below g/8, so strict orders
    between distinct y-values or heights survive and only ties get split: two
    equal heights end up differing by 2*delta*|i - j|. A stretched rectangle
    only grows, so every intersection survives, and the total growth of any
    pair stays below g, so no new intersection appears.
    """
    n = len(inst)
    if n == 0:
        return Instance([], perturbed=True)
    values = [r.y_lo for r in inst] + [r.y_hi for r in inst] + inst.heights
    delta = _min_gap(values) / (8 * (n + 1))
    stretched = [
        replace(r, y_lo=r.y_lo - i * delta, y_hi=r.y_hi + i * delta)
        for i, r in enumerate(inst.rects, start=1)
    ]
    logger.debug("perturbed %d rectangles with delta=%s", n, delta)
    return Instance(stretched, perturbed=True, origins=inst.origins)


def ensure_distinct_heights(inst: Instance) -> Instance:
    """Return ``inst`` itself when its heights are already distinct."""
    if not inst.has_height_ties:
        return inst
    return perturb(inst)
