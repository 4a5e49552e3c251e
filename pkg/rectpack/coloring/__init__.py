from rectpack.coloring.agb import agb_coloring, crossing_levels
from rectpack.coloring.greedy import corner_coloring, degeneracy_greedy, degeneracy_order
from rectpack.coloring.types import Coloring, SparseCertificate, WarmupLevels
from rectpack.coloring.warmup import warmup_color_cc, warmup_color_vertical, warmup_levels

__all__ = [
    "Coloring",
    "SparseCertificate",
    "WarmupLevels",
    "agb_coloring",
    "corner_coloring",
    "crossing_levels",
    "degeneracy_greedy",
    "degeneracy_order",
    "warmup_color_cc",
    "warmup_color_vertical",
    "warmup_levels",
]
