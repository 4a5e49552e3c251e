# Graph-side clique oracles on the intersection graph, through networkx.

from typing import FrozenSet, Optional, Set

import networkx as nx
import numpy as np

from rectpack.geom.instance import Instance
from rectpack.oracles.budget import OracleBudget, resolve


def intersection_graph(inst: Instance) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(inst.ids)
    for a, b in np.argwhere(np.triu(inst.adjacency, k=1)):
        graph.add_edge(inst.rects[a].id, inst.rects[b].id)
    return graph


def exact_clique_graph(inst: Instance, budget: Optional[OracleBudget] = None) -> int:
    """Maximum clique size by pivoting Bron-Kerbosch enumeration."""
    budget = resolve(budget, "clique")
    budget.admit(len(inst), "clique")
    if len(inst) == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(intersection_graph(inst)))


def graph_maximal_cliques(inst: Instance, budget: Optional[OracleBudget] = None) -> Set[FrozenSet[str]]:
    budget = resolve(budget, "clique")
    budget.admit(len(inst), "clique")
    if len(inst) == 0:
        return set()
    return {frozenset(c) for c in nx.find_cliques(intersection_graph(inst))}
