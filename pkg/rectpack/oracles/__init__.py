from rectpack.oracles.budget import OracleBudget
from rectpack.oracles.chromatic import exact_chromatic
from rectpack.oracles.cliques import exact_clique_graph, graph_maximal_cliques, intersection_graph
from rectpack.oracles.mwis import exact_mwis
from rectpack.oracles.validate import Verdict, validate_coloring, validate_independent

__all__ = [
    "OracleBudget",
    "Verdict",
    "exact_chromatic",
    "exact_clique_graph",
    "exact_mwis",
    "graph_maximal_cliques",
    "intersection_graph",
    "validate_coloring",
    "validate_independent",
]
