from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
import pytest

from hankelkit.config import AnalysisConfig, QuadratureConfig
from hankelkit.decay import Decay, DecayKind
from hankelkit.exceptions import ValidationError
from hankelkit.measure import Measure, compact, geometric, hilbert, log_moments, moments, stieltjes
from hankelkit.moments import ClassificationReport, MomentSequence, classify, default_orders, determinacy_check
from hankelkit.types import FloatArray


def _formula(
    formula: Callable[[FloatArray], FloatArray], count: int = 32, decay: Decay | None = None
) -> MomentSequence:
    return MomentSequence.from_formula(formula, count, decay)


def _assert_chain(report: ClassificationReport) -> None:
    if report.compact:
        assert report.bounded is True
    if report.bounded:
        assert report.closable is True


def test_symbolic_hilbert_is_bounded_not_compact() -> None:
    report = classify(_formula(lambda n: 1.0 / (n + 1.0), decay=Decay(DecayKind.BIG_O_INVERSE)))
    assert report.mode == "symbolic"
    assert report.confidence == 1.0
    assert (report.closable, report.bounded, report.compact) == (True, True, False)
    assert report.positive_semidefinite
    assert report.stieltjes is True


def test_symbolic_ones_is_not_closable() -> None:
    report = classify(_formula(np.ones_like, decay=Decay(DecayKind.BOUNDED_NOT_DECAYING)))
    assert report.closable is False
    assert report.bounded is False
    assert report.endpoint_atoms is True


def test_symbolic_little_o_inverse_is_compact() -> None:
    report = classify(_formula(lambda n: 1.0 / ((n + 1.0) * (n + 2.0)), decay=Decay(DecayKind.LITTLE_O_INVERSE)))
    assert report.compact is True
    _assert_chain(report)


def test_symbolic_slow_decay_is_closable_only() -> None:
    report = classify(_formula(lambda n: (n + 1.0) ** -0.5, decay=Decay(DecayKind.TENDS_TO_ZERO)))
    assert report.closable is True
    assert report.bounded is False
    assert report.compact is False


def test_symbolic_geometric_reads_radius() -> None:
    report = classify(_formula(lambda n: 0.5**n, decay=Decay.geometric(0.5)))
    assert report.compact is True
    assert report.support_radius == 0.5
    assert report.endpoint_atoms is True
    assert report.stieltjes_radius == 0.5


def test_symbolic_geometric_at_rate_one() -> None:
    exact = classify(_formula(np.ones_like, decay=Decay.geometric(1.0)))
    assert (exact.closable, exact.bounded, exact.compact) == (False, False, False)
    little = classify(_formula(lambda n: 1.0 / (n + 1.0), decay=Decay.geometric(1.0, little_o=True)))
    assert little.closable is True
    assert little.bounded is None
    assert little.compact is None


def test_symbolic_mode_from_measure_family(cfg: QuadratureConfig) -> None:
    report = classify(moments(compact(), 32, cfg))
    assert report.mode == "symbolic"
    assert report.compact is True
    assert report.support_radius == 1.0
    assert report.endpoint_atoms is False


def test_report_rejects_broken_implication_chain() -> None:
    with pytest.raises(ValidationError):
        ClassificationReport(
            positive_semidefinite=True,
            closable=True,
            bounded=False,
            compact=True,
            support_radius=None,
            stieltjes=None,
            mode="heuristic",
            confidence=0.5,
        )
    with pytest.raises(ValidationError):
        ClassificationReport(
            positive_semidefinite=True,
            closable=False,
            bounded=True,
            compact=False,
            support_radius=None,
            stieltjes=None,
            mode="heuristic",
            confidence=0.5,
        )


def test_heuristic_ones() -> None:
    report = classify(np.ones(64))
    assert report.mode == "heuristic"
    assert (report.closable, report.bounded, report.compact) == (False, False, False)
    assert report.endpoint_atoms is True
    assert report.support_radius == pytest.approx(1.0, rel=1e-6)


def test_heuristic_hilbert() -> None:
    report = classify(1.0 / np.arange(1, 65))
    assert (report.closable, report.bounded, report.compact) == (True, True, False)
    assert report.fit is not None
    assert report.fit.window == (32, 64)
    assert report.fit.loglog_slope == pytest.approx(-1.0, abs=0.05)
    assert report.notes


def test_heuristic_inverse_square_is_compact() -> None:
    report = classify(1.0 / np.arange(1, 65) ** 2)
    assert report.compact is True
    _assert_chain(report)


def test_heuristic_geometric_fit_recovers_radius() -> None:
    report = classify(0.5 ** np.arange(64))
    assert report.compact is True
    assert report.support_radius == pytest.approx(0.5, rel=1e-6)
    assert report.endpoint_atoms is True
    assert report.stieltjes is True


def test_heuristic_radius_of_single_atom(cfg: QuadratureConfig) -> None:
    seq = moments(geometric(0.8), 64, cfg)
    report = classify(seq.values)
    assert report.support_radius == pytest.approx(0.8, rel=1e-6)


def test_zero_sequence_is_trivially_compact() -> None:
    report = classify(np.zeros(16))
    assert (report.closable, report.bounded, report.compact) == (True, True, True)
    assert report.support_radius == 0.0


def test_delta_zero_sequence() -> None:
    report = classify(np.r_[1.0, np.zeros(31)])
    assert report.compact is True
    assert report.support_radius == 0.0
    assert report.endpoint_atoms is True


def test_classify_needs_sixteen_moments() -> None:
    with pytest.raises(ValidationError):
        classify(np.ones(15))


def test_classify_rejects_orders_beyond_data() -> None:
    with pytest.raises(ValidationError):
        classify(np.ones(16), orders=[9])


def test_classify_records_psd_evidence_per_order() -> None:
    report = classify(1.0 / np.arange(1, 33), orders=[8, 4, 8])
    assert [(item.order, item.shift) for item in report.psd_evidence] == [(4, 0), (4, 1), (8, 0), (8, 1)]


def test_indefinite_sequence_fails_psd() -> None:
    report = classify(np.r_[1.0, 2.0, np.ones(30)])
    assert not report.positive_semidefinite


def test_psd_tolerance_comes_from_analysis_config() -> None:
    values = np.r_[1.0, 1.0, 1.0 - 1e-6, np.ones(29)]
    loose = classify(values, analysis=AnalysisConfig(psd_tolerance=1e-3))
    strict = classify(values, analysis=AnalysisConfig(psd_tolerance=1e-12))
    assert loose.positive_semidefinite
    assert not strict.positive_semidefinite


def test_default_orders() -> None:
    assert default_orders(64) == [4, 8, 16, 32]
    assert default_orders(16) == [4, 8]
    assert default_orders(5) == [3]
    assert default_orders(8192, max_order=100) == [4, 8, 16, 32, 64]


def test_determinacy_of_compact_measure(unit_lebesgue: Measure, cfg: QuadratureConfig) -> None:
    evidence = determinacy_check(moments(unit_lebesgue, 24, cfg))
    assert evidence.bounded_growth
    assert evidence.rates.size == 23


def test_determinacy_flags_stieltjes_growth(cfg: QuadratureConfig) -> None:
    _, logs = log_moments(stieltjes(0.0), 20, cfg)
    evidence = determinacy_check(log_abs=logs)
    assert not evidence.bounded_growth
    assert evidence.window == (10, 20)
    assert evidence.window_max > 1.5 * evidence.rates[9]


def test_determinacy_from_hilbert_measure(cfg: QuadratureConfig) -> None:
    assert determinacy_check(moments(hilbert(), 12, cfg)).bounded_growth


def test_determinacy_rejects_bad_input() -> None:
    with pytest.raises(ValidationError):
        determinacy_check()
    with pytest.raises(ValidationError):
        determinacy_check(log_abs=[0.0, math.inf, 1.0])
    with pytest.raises(ValidationError):
        determinacy_check([1.0, 0.5])
