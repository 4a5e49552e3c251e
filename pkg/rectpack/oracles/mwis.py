# Exact maximum weight independent set by branch and bound over bitsets.

import logging
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple

from rectpack.geom.instance import Instance
from rectpack.oracles.budget import OracleBudget, resolve

logger = logging.getLogger(__name__)


def neighbor_masks(inst: Instance) -> List[int]:
    masks = []
    for row in inst.adjacency:
        mask = 0
        for j, hit in enumerate(row):
            if hit:
                mask |= 1 << j
        masks.append(mask)
    return masks


def exact_mwis(inst: Instance, budget: Optional[OracleBudget] = None) -> Tuple[FrozenSet[str], Fraction]:
    """
    Maximum weight independent set of the intersection graph.

    Branches on a vertex of maximum degree (include it, or drop it) and prunes
    with a greedy clique partition: an independent set takes at most one
    vertex per clique, so the heaviest weight of each clique bounds the rest.
    """
    budget = resolve(budget, "mwis")
    n = len(inst)
    budget.admit(n, "mwis")
    deadline = budget.deadline()
    nbr = neighbor_masks(inst)
    weights = [r.weight for r in inst]
    heaviest_first = sorted(range(n), key=lambda v: (-weights[v], v))
    best = {"weight": Fraction(-1), "mask": 0}

    def bound(mask: int) -> Fraction:
        total = Fraction(0)
        commons: List[int] = []
        for v in heaviest_first:
            if not mask >> v & 1:
                continue
            for idx, common in enumerate(commons):
                if common >> v & 1:
                    commons[idx] = common & nbr[v]
                    break
            else:
                commons.append(nbr[v])
                total += weights[v]
        return total

    def search(mask: int, weight: Fraction, chosen: int):
        deadline.check("mwis")
        if mask == 0:
            if weight > best["weight"]:
                best["weight"], best["mask"] = weight, chosen
            return
        if weight + bound(mask) <= best["weight"]:
            return
        members = [v for v in range(n) if mask >> v & 1]
        v = max(members, key=lambda u: (bin(nbr[u] & mask).count("1"), -u))
        if nbr[v] & mask == 0:
            # isolated vertices all join
            search(0, weight + sum((weights[u] for u in members), Fraction(0)), chosen | mask)
            return
        search(mask & ~nbr[v] & ~(1 << v), weight + weights[v], chosen | 1 << v)
        search(mask & ~(1 << v), weight, chosen)

    search((1 << n) - 1, Fraction(0), 0)
    chosen = frozenset(inst.rects[v].id for v in range(n) if best["mask"] >> v & 1)
    return chosen, max(best["weight"], Fraction(0))
