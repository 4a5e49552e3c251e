import logging
from typing import List, Optional

from rectpack.cliques.maximal import clique_number
from rectpack.geom.instance import Instance
from rectpack.oracles.budget import Deadline, OracleBudget, resolve
from rectpack.oracles.mwis import neighbor_masks

logger = logging.getLogger(__name__)


def _colorable(order: List[int], nbr: List[int], colors: int, deadline: Deadline) -> bool:
    assigned = {}

    def place(idx: int, used: int) -> bool:
        deadline.check("chromatic")
        if idx == len(order):
            return True
        v = order[idx]
        taken = {assigned[u] for u in assigned if nbr[v] >> u & 1}
        # a fresh color is only worth trying once
        for c in range(min(used + 1, colors)):
            if c in taken:
                continue
            assigned[v] = c
            if place(idx + 1, max(used, c + 1)):
                return True
            del assigned[v]
        return False

    return place(0, 0)


def exact_chromatic(inst: Instance, budget: Optional[OracleBudget] = None) -> int:
    """Chromatic number by trying k = w, w + 1, ... colors with backtracking."""
    budget = resolve(budget, "chromatic")
    n = len(inst)
    budget.admit(n, "chromatic")
    if n == 0:
        return 0
    deadline = budget.deadline()
    nbr = neighbor_masks(inst)
    order = sorted(range(n), key=lambda v: (-bin(nbr[v]).count("1"), v))
    k = clique_number(inst)
    while not _colorable(order, nbr, k, deadline):
        k += 1
    return k
