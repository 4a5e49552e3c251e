from pydantic import BaseModel
from typing import Callable, Literal, TypeAlias

from rectpack.coloring.types import Coloring
from rectpack.geom.instance import Instance

ColoringAlgorithm: TypeAlias = Literal["hier", "agb", "corner", "sparse", "warmup-cc", "warmup-vertical"]

Colorer: TypeAlias = Callable[[Instance], Coloring]


class ColorParams(BaseModel):
    algo: ColoringAlgorithm = "hier"
    log_mode: str = "console"
