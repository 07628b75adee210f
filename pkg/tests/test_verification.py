from __future__ import annotations

import math

import numpy as np
import pytest

from hankelkit import Toolkit
from hankelkit.config import Settings
from hankelkit.exceptions import ConfigurationError, ValidationError, VerificationError
from hankelkit.measure import Measure, lebesgue, lebesgue01, stieltjes_log_moment_exact
from hankelkit.operators import CoeffVector
from hankelkit.verification import (
    SuiteResult,
    run_closure,
    run_form,
    run_intertwine,
    run_laguerre,
    run_stieltjes_demo,
    run_transport,
    run_unitarity,
)


def test_form_suite_passes(settings: Settings) -> None:
    result = run_form(settings, K=16, trials=20, seed=7).check()
    assert len(result.rows) == 20
    assert all(1 <= row["K"] <= 16 for row in result.rows)
    assert result.max_deviation <= 1e-9


@pytest.mark.slow
def test_form_suite_at_full_size(test_measures: list[Measure], settings: Settings) -> None:
    for m in test_measures:
        result = run_form(settings, measure=m, K=32, trials=500, seed=7).check()
        assert len(result.rows) == 500
        assert result.max_deviation <= 1e-9


def test_form_suite_is_reproducible(settings: Settings) -> None:
    first = run_form(settings, K=4, trials=5, seed=11)
    second = run_form(settings, K=4, trials=5, seed=11)
    assert [row["direct"] for row in first.rows] == [row["direct"] for row in second.rows]


def test_intertwine_suite_passes(settings: Settings) -> None:
    result = run_intertwine(settings, K=8, trials=3, seed=7).check()
    assert [row["K"] for row in result.rows] == [8, 8, 8]


@pytest.mark.slow
def test_intertwine_suite_at_full_size(settings: Settings) -> None:
    result = run_intertwine(settings, K=32, trials=100, seed=7).check()
    assert len(result.rows) == 100
    assert result.max_deviation <= 1e-8


def test_intertwine_suite_with_fixed_coefficients(settings: Settings) -> None:
    result = run_intertwine(settings, coefficients=CoeffVector.of([0.0, 1.0]), lam_grid=[1.0]).check()
    assert len(result.rows) == 1
    row = result.rows[0]
    assert row["K"] == 2
    assert row["lhs"] == pytest.approx(2.0 / 9.0)


def test_intertwine_suite_on_transported_measure(settings: Settings) -> None:
    result = run_intertwine(settings, K=6, trials=2, measure=lebesgue(-0.5, 0.5)).check()
    assert all(row["sigma_discrepancy"] is not None for row in result.rows)


def test_laguerre_suite_passes(settings: Settings) -> None:
    result = run_laguerre(settings, max_n=20).check()
    checks = {row["check"] for row in result.rows}
    assert checks == {"laplace", "orthonormality"}
    assert sum(row["check"] == "laplace" for row in result.rows) == 21 * 5


def test_transport_suite_passes(settings: Settings) -> None:
    result = run_transport(settings).check()
    assert len(result.rows) == 3
    assert result.rows[0]["mass"] == pytest.approx(1.0)


def test_closure_suite_passes(settings: Settings) -> None:
    result = run_closure(settings).check()
    assert [row["K"] for row in result.rows] == [8, 16, 32, 64]
    assert result.rows[-1]["limit_gap"] <= 1e-10


def test_closure_suite_rejects_bad_arguments(settings: Settings) -> None:
    with pytest.raises(ValidationError):
        run_closure(settings, measure=lebesgue01())
    with pytest.raises(ValidationError):
        run_closure(settings, ratio=1.0)


def test_unitarity_suite_passes(settings: Settings) -> None:
    result = run_unitarity(settings).check()
    assert len(result.rows) == 3


def test_stieltjes_demo_matches_closed_form(settings: Settings) -> None:
    result = run_stieltjes_demo(settings, thetas=(0.0, 0.5), count=11).check()
    first = result.rows[0]
    assert first["values"]["0.0"] == pytest.approx(2.27588, rel=1e-5)
    assert result.rows[1]["values"]["0.5"] == pytest.approx(math.sqrt(math.pi) * math.e, rel=1e-6)
    assert result.rows[10]["log_exact"] == stieltjes_log_moment_exact(10)


def test_stieltjes_demo_tabulates_large_orders_in_log_space(settings: Settings) -> None:
    result = run_stieltjes_demo(settings, thetas=(1.0,), count=45)
    assert "values" in result.rows[40]
    assert "values" not in result.rows[44]
    assert result.rows[44]["deviation"] == 0.0
    assert result.rows[44]["log_values"]["1.0"] == pytest.approx(stieltjes_log_moment_exact(44), rel=1e-10)


def test_stieltjes_demo_needs_thetas(settings: Settings) -> None:
    with pytest.raises(ValidationError):
        run_stieltjes_demo(settings, thetas=())


def test_check_raises_on_breach() -> None:
    worst = {"trial": 0, "deviation": 1.0}
    result = SuiteResult(name="form", tolerance=1e-9, max_deviation=1.0, rows=(worst,), worst_case=worst)
    assert not result.passed
    with pytest.raises(VerificationError) as excinfo:
        result.check()
    assert excinfo.value.worst_case == worst


def test_toolkit_binds_settings() -> None:
    toolkit = Toolkit.from_config(relative_tolerance=1e-10, seed=3)
    assert toolkit.settings.quadrature.relative_tolerance == 1e-10
    assert toolkit.settings.seed == 3
    assert toolkit.rng().integers(0, 1000) == np.random.default_rng(3).integers(0, 1000)


def test_toolkit_operations(settings: Settings) -> None:
    toolkit = Toolkit(settings)
    assert "hilbert" in toolkit.families()
    assert "laguerre" in toolkit.suites()
    m = toolkit.family("lebesgue01")
    direct, integral = toolkit.form(m, [1.0, 1.0])
    assert direct == pytest.approx(7.0 / 3.0)
    assert integral == pytest.approx(7.0 / 3.0)
    assert toolkit.total_mass(m) == pytest.approx(1.0)
    assert toolkit.tail_mass(m, "right", 0.1) == pytest.approx(0.1)
    profile = toolkit.spectrum(1.0 / np.arange(1, 32), k=3)
    assert profile.orders == (8, 16)
    assert profile.top_eigenvalues[0].size == 3
    assert toolkit.verify("laguerre", max_n=4).passed
    with pytest.raises(ConfigurationError):
        toolkit.verify("fourier")


def test_toolkit_public_methods_are_documented() -> None:
    public = [name for name in vars(Toolkit) if not name.startswith("_")]
    missing = [name for name in public if not (getattr(Toolkit, name).__doc__ or "").strip()]
    assert missing == []
