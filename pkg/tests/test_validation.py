"""Verify checks: quick level passes and fault injection is detected."""
import pytest

from floquet_probe import analytic, validation


def test_quick_checks_pass():
    results = validation.run_checks("quick")
    for r in results:
        assert r.passed, r.line()
    names = {r.name for r in results}
    assert "monodromy-fuzz-20" in names
    assert "bessel-series" in names


def test_unknown_level_rejected():
    with pytest.raises(ValueError):
        validation.run_checks("paranoid")


def test_corrupted_bessel_detected(monkeypatch):
    true_bessel = analytic.bessel_j
    monkeypatch.setattr(analytic, "bessel_j",
                        lambda n, x: true_bessel(n, x) + 1e-6)
    result = validation.check_bessel()
    assert not result.passed
    assert result.name == "bessel-series"


def test_check_line_format():
    r = validation.CheckResult(name="demo", tolerance=1e-3, deviation=1e-5,
                               seconds=0.1)
    assert r.passed
    assert "pass" in r.line() and "demo" in r.line()
    bad = validation.CheckResult(name="demo", tolerance=1e-6, deviation=1.0,
                                 seconds=0.1)
    assert not bad.passed
    assert "FAIL" in bad.line()
