from pydantic import BaseModel, Field
from typing import Any, Callable, Dict, Literal, Optional, TypeAlias

from rectpack.geom.instance import Instance

MwisrSolver: TypeAlias = Callable[[Instance], Dict[str, Any]]


class MwisrParams(BaseModel):
    method: Literal["approx", "exact"] = "approx"
    feas_tol: Optional[float] = Field(default=None, gt=0, lt=1)
    opt_tol: Optional[float] = Field(default=None, gt=0, lt=1)
    log_mode: str = "console"
