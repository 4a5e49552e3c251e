"""
Small helpers: binary words, ordered fan-out, bench metrics and the config layer.
"""
import math

from rectpack.config.config_manager import config
from rectpack.utils import binary_words, ceil_log2, get_from_env
from rectpack.utils.calculator import SuiteResult, TrialOutcome, compute_metrics, run_concurrent, run_sequential
from rectpack.utils.workers import map_ordered

import pytest


def test_binary_words():
    assert binary_words(0) == [""]
    assert binary_words(2) == ["00", "01", "10", "11"]
    assert binary_words(3) == sorted(binary_words(3))
    assert len(binary_words(5)) == 32


def test_ceil_log2():
    assert [ceil_log2(v) for v in (0, 1, 2, 3, 4, 5, 8, 9)] == [0, 0, 1, 2, 2, 3, 3, 4]


def test_map_ordered_keeps_order():
    items = list(range(50))
    assert map_ordered(lambda v: v * v, items, max_workers=4) == [v * v for v in items]
    assert map_ordered(lambda v: v, [], max_workers=4) == []


def test_compute_metrics():
    metrics = compute_metrics(list(range(1, 101)))
    assert metrics["avg"] == 50.5
    assert metrics["p90"] == pytest.approx(90.1)
    assert math.isnan(compute_metrics([])["avg"])


def test_suite_result_keeps_first_failure_in_item_order():
    def check(v):
        if v % 3 == 2:
            return TrialOutcome(False, {"v": v}, detail=f"bad {v}")
        return TrialOutcome(True, {"v": v})

    for result in (run_concurrent("demo", check, list(range(10)), max_workers=4),
                   run_sequential("demo", check, list(range(10)))):
        assert result.trials == 10
        assert result.failures == 3
        assert result.first_failure == "bad 2"
        assert not result.ok
        assert result.metrics()["v"]["avg"] == 4.5


def test_crashing_trial_counts_as_failure():
    def check(v):
        raise RuntimeError("boom")

    result = run_sequential("crash", check, [1])
    assert result.failures == 1
    assert "RuntimeError" in result.first_failure


def test_worker_override_from_env(monkeypatch):
    monkeypatch.setenv("RECTPACK_THREADS", "3")
    assert config.get_max_workers() == 3
    monkeypatch.setenv("RECTPACK_THREADS", "zero")
    assert config.get_max_workers() >= 1


def test_get_from_env(monkeypatch):
    monkeypatch.delenv("RECTPACK_MISSING", raising=False)
    assert get_from_env("RECTPACK_MISSING", default="x") == "x"
    with pytest.raises(ValueError):
        get_from_env("RECTPACK_MISSING")


def test_config_sections():
    assert config.get_lp_config()["feas_tol"] == pytest.approx(1e-9)
    assert config.get_oracle_config()["mwis_max_n"] == 24
    assert len(config.get_render_config()["palette"]) == 12


def test_bench_lp_suites_keep_console_quiet(capsys):
    from rectpack.instances.generators import GeneratorSpec
    from rectpack.utils.bench import check_mwisr, check_rounding

    spec = GeneratorSpec(kind="uniform", n=6, seed=3, grid=50, weights="random")
    assert check_rounding(spec).ok
    assert check_mwisr(spec).ok
    assert "[lp]" not in capsys.readouterr().err
