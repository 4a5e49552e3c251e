# Helper utilities for the bench suites: run one check per generated instance,
# concurrently or sequentially, and summarize the numbers each check reports.

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np


def compute_metrics(data: Sequence[float]) -> Dict[str, float]:
    if len(data) == 0:
        return {"avg": float("nan"), "p90": float("nan"), "p99": float("nan")}
    return {
        "avg": float(np.mean(data)),
        "p90": float(np.percentile(data, 90)),
        "p99": float(np.percentile(data, 99)),
    }


@dataclass
class TrialOutcome:
    ok: bool
    values: Dict[str, float] = field(default_factory=dict)
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failures: int = 0
    first_failure: str = ""
    values: Dict[str, List[float]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def add(self, outcome: TrialOutcome):
        self.trials += 1
        if not outcome.ok:
            self.failures += 1
            if not self.first_failure:
                self.first_failure = outcome.detail
        for key, value in outcome.values.items():
            self.values.setdefault(key, []).append(value)

    def metrics(self) -> Dict[str, Dict[str, float]]:
        return {key: compute_metrics(values) for key, values in sorted(self.values.items())}


def _guarded(check: Callable[[Any], TrialOutcome], item: Any) -> TrialOutcome:
    try:
        return check(item)
    except Exception as e:  # a crashing trial is a failed trial
        return TrialOutcome(False, detail=f"{type(e).__name__}: {e}")


def run_concurrent(name: str, check: Callable[[Any], TrialOutcome], items: Sequence[Any],
                   max_workers: Optional[int] = None) -> SuiteResult:
    """Run ``check`` on every item in a thread pool; failures are reported in
    item order so the first failure does not depend on scheduling."""
    result = SuiteResult(name)
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        futures = {pool.submit(_guarded, check, item): idx for idx, item in enumerate(items)}
        outcomes: Dict[int, TrialOutcome] = {}
        for future in as_completed(futures):
            outcomes[futures[future]] = future.result()
    for idx in range(len(items)):
        result.add(outcomes[idx])
    return result


def run_sequential(name: str, check: Callable[[Any], TrialOutcome], items: Sequence[Any]) -> SuiteResult:
    result = SuiteResult(name)
    for item in items:
        result.add(_guarded(check, item))
    return result
