import time
from typing import Optional

from pydantic import BaseModel, Field

from rectpack.errors import BudgetExceeded


class OracleBudget(BaseModel):
    max_n: int = Field(gt=0)
    time_limit: float = Field(default=60.0, gt=0)

    @classmethod
    def for_oracle(cls, name: str) -> "OracleBudget":
        """Defaults from the ``oracles`` section of config.yaml."""
        from rectpack.config.config_manager import config

        settings = config.get_oracle_config()
        defaults = {"mwis": 24, "chromatic": 14, "clique": 40}
        return cls(
            max_n=settings.get(f"{name}_max_n", defaults[name]),
            time_limit=settings.get("time_limit", 60),
        )

    def admit(self, n: int, oracle: str):
        if n > self.max_n:
            raise BudgetExceeded(f"{oracle} oracle accepts at most {self.max_n} rectangles, got {n}")

    def deadline(self) -> "Deadline":
        return Deadline(self.time_limit)


class Deadline:
    def __init__(self, seconds: float):
        self.expires = time.monotonic() + seconds
        self.seconds = seconds

    def check(self, oracle: str):
        if time.monotonic() > self.expires:
            raise BudgetExceeded(f"{oracle} oracle ran past {self.seconds:g} s")


def resolve(budget: Optional[OracleBudget], name: str) -> OracleBudget:
    return budget if budget is not None else OracleBudget.for_oracle(name)
