# Derandomized rounding of the clique LP to an integral multiplicity vector
# by the method of conditional expectations.

import logging
import math
from dataclasses import dataclass, field
from decimal import ROUND_CEILING, Decimal, localcontext
from fractions import Fraction
from typing import Dict, List

from rectpack.errors import InternalBoundExceeded
from rectpack.geom.instance import Instance
from rectpack.mwisr.poisson import PoissonBinomial
from rectpack.mwisr.solver import LpSolution

logger = logging.getLogger(__name__)


@dataclass
class MultiplicityVector:
    """
    y_R copies of every rectangle, 0 <= y_R <= m, with every maximal clique
    summing to at most 2m and total weight at least m w* / 2.
    """
    y: Dict[str, int]
    m: int
    weight: Fraction = Fraction(0)
    shortcut: bool = False
    expectations: List[Fraction] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.y.values())


def rounding_parameter(n: int) -> int:
    """m = ceil(9 ln n), and 1 for n <= 1."""
    if n <= 1:
        return 1
    with localcontext() as ctx:
        ctx.prec = 60
        value = Decimal(9) * Decimal(n).ln()
    return max(1, int(value.to_integral_value(rounding=ROUND_CEILING)))


def round_derandomized(inst: Instance, lp: LpSolution) -> MultiplicityVector:
    """
    Round x* to y with y_R = floor(m x*_R) + b_R, fixing the bits b_R in
    instance order.

    Each bit takes the value that maximizes the conditional expectation of

        sum_R w_R y_R - (m n w* / 2) * #(cliques whose sum exceeds 2m)

    with the remaining bits still independent Bernoulli(frac(m x*_R)). The
    overflow probability of a clique is an exact Poisson binomial tail, kept
    per clique and updated only for the cliques that hold the fixed rectangle.
    If one rectangle alone weighs at least w*/2, it gets all m copies.
    """
    n = len(inst)
    m = rounding_parameter(n)
    if n == 0:
        return MultiplicityVector({}, m)

    w = [r.weight for r in inst]
    x = [lp.x_star[r.id] for r in inst]
    w_star = lp.w_star

    heavy = max(range(n), key=lambda p: (w[p], -p))
    if w[heavy] >= w_star / 2:
        y = {r.id: (m if p == heavy else 0) for p, r in enumerate(inst)}
        logger.debug("heavy rectangle %s takes all %d copies", inst.rects[heavy].id, m)
        return MultiplicityVector(y, m, m * w[heavy], shortcut=True)

    base = [math.floor(m * v) for v in x]
    frac = [m * v - b for v, b in zip(x, base)]
    penalty_scale = Fraction(m * n) * w_star / 2
    cliques = lp.cliques.members
    free = [[p for p in members if 0 < frac[p] < 1] for members in cliques]
    dists = [PoissonBinomial(frac[p] for p in members) for members in free]
    budgets = [2 * m - sum(base[p] for p in members) for members in cliques]
    holding: Dict[int, List[int]] = {}
    for c, members in enumerate(free):
        for p in members:
            holding.setdefault(p, []).append(c)

    expectation = (sum((wp * (b + f) for wp, b, f in zip(w, base, frac)), Fraction(0))
                   - penalty_scale * sum((d.tail(t) for d, t in zip(dists, budgets)), Fraction(0)))
    trajectory = [expectation]
    bits = [0] * n
    for p in range(n):
        if not 0 < frac[p] < 1:
            continue
        held = holding.get(p, [])
        reduced = {c: dists[c].without(frac[p]) for c in held}
        current = sum((dists[c].tail(budgets[c]) for c in held), Fraction(0))
        outcome = {}
        for b in (0, 1):
            after = sum((reduced[c].tail(budgets[c] - b) for c in held), Fraction(0))
            outcome[b] = expectation + w[p] * (b - frac[p]) - penalty_scale * (after - current)
        b = 1 if outcome[1] > outcome[0] else 0
        if outcome[b] < expectation:
            raise InternalBoundExceeded(f"conditional expectation dropped while fixing {inst.rects[p].id}")
        for c in held:
            dists[c] = reduced[c]
            budgets[c] -= b
        bits[p] = b
        expectation = outcome[b]
        trajectory.append(expectation)

    y = {r.id: base[p] + bits[p] for p, r in enumerate(inst)}
    for members in cliques:
        total = sum(base[p] + bits[p] for p in members)
        if total > 2 * m:
            raise InternalBoundExceeded(f"clique sum {total} above 2m = {2 * m}")
    weight = sum((wp * y[r.id] for wp, r in zip(w, inst)), Fraction(0))
    if weight * 2 < m * w_star:
        raise InternalBoundExceeded(f"rounded weight {weight} below m w*/2")
    return MultiplicityVector(y, m, weight, expectations=trajectory)
