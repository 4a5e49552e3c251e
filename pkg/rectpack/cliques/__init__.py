from rectpack.cliques.maximal import CliqueList, clique_number, max_depth, maximal_cliques
from rectpack.cliques.points import candidate_points, containing_set
from rectpack.geom.rect import Point

__all__ = [
    "CliqueList",
    "Point",
    "candidate_points",
    "clique_number",
    "containing_set",
    "max_depth",
    "maximal_cliques",
]
