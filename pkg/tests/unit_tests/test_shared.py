import pytest

from shared.configuration import RunConfig
from shared.errors import (
    CorrelatorMissingError,
    IntegralityError,
    MultiIndexParseError,
    WpVolumeError,
)
from shared.reports import CheckResult, SuiteReport


def test_run_config_defaults():
    config = RunConfig()
    assert config.order == 6
    assert config.output_format == "text"
    assert config.seed is None


def test_from_mapping_ignores_unknown_and_none():
    config = RunConfig.from_mapping({"order": 9, "seed": None, "colour": "red"})
    assert config.order == 9
    assert config.seed is None


def test_from_env(monkeypatch):
    monkeypatch.setenv("WPVOL_CACHE_DIR", "/tmp/wpvol")
    monkeypatch.setenv("WPVOL_FACTORIAL_CACHE", "64")
    config = RunConfig.from_env(order=4)
    assert config.cache_dir == "/tmp/wpvol"
    assert config.factorial_cache_bound == 64
    assert config.order == 4


def test_run_config_is_keyword_only():
    with pytest.raises(TypeError):
        RunConfig("volume")  # type: ignore[misc]


def test_error_hierarchy():
    assert issubclass(MultiIndexParseError, ValueError)
    assert issubclass(IntegralityError, ArithmeticError)
    error = CorrelatorMissingError(1, [2, 0])
    assert isinstance(error, KeyError)
    assert isinstance(error, WpVolumeError)
    assert str(error) == "No correlator for genus 1 with exponents [0, 2]"


def test_soft_results_do_not_fail_a_suite():
    report = SuiteReport(
        suite="appendix",
        order=6,
        results=[
            CheckResult(name="a", identity="a", passed=True),
            CheckResult(name="b", identity="b", passed=False, soft=True),
        ],
    )
    assert report.passed
    assert report.failures() == []
    report.results.append(CheckResult(name="c", identity="c", passed=False, counterexample="x^2"))
    assert not report.passed
    assert [r.name for r in report.failures()] == ["c"]
