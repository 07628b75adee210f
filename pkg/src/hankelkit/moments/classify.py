"""Closability, boundedness and compactness verdicts for moment sequences.

Symbolic mode reads verdicts off an exact decay descriptor. Heuristic mode
works from the finite prefix alone: it fits log|q_n| against log n over the
top dyadic window [N/2, N) and applies fixed thresholds from
`AnalysisConfig`. Heuristic verdicts are evidence, not proofs.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from scipy.special import gammaln
from scipy.stats import linregress

from ..config import AnalysisConfig
from ..decay import Decay, DecayKind
from ..exceptions import ValidationError
from ..types import FloatArray, RealVector
from .hankel import hankel_section, is_psd, required_moments
from .sequence import MomentSequence, as_moment_sequence

logger = logging.getLogger(__name__)

Mode = Literal["symbolic", "heuristic"]

MIN_CLASSIFY_MOMENTS = 16
GROWTH_FACTOR = 1.5
HEURISTIC_NOTE = "heuristic thresholds are engineering choices; finite data cannot decide limits"

_DEFAULT_ANALYSIS = AnalysisConfig()


@dataclass(frozen=True)
class PsdEvidence:
    order: int
    shift: int
    min_eigenvalue: float
    passed: bool


@dataclass(frozen=True)
class FitEvidence:
    """Regression of log|q_n| over the top window."""

    window: tuple[int, int]
    loglog_slope: float
    r_squared: float
    max_abs: float
    start_weighted: float
    end_weighted: float


@dataclass(frozen=True)
class ClassificationReport:
    """Verdicts are True, False, or None when undetermined.

    The chain compact ⇒ bounded ⇒ closable is enforced on construction.
    """

    positive_semidefinite: bool
    closable: bool | None
    bounded: bool | None
    compact: bool | None
    support_radius: float | None
    stieltjes: bool | None
    mode: Mode
    confidence: float
    psd_evidence: tuple[PsdEvidence, ...] = ()
    endpoint_atoms: bool | None = None
    stieltjes_radius: float | None = None
    decay: Decay | None = None
    fit: FitEvidence | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.compact and self.bounded is not True:
            raise ValidationError.broken_implication("compactness", "boundedness")
        if self.bounded and self.closable is not True:
            raise ValidationError.broken_implication("boundedness", "closability")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValidationError.argument_out_of_range("confidence", self.confidence, "a real in [0, 1]")


@dataclass(frozen=True)
class DeterminacyEvidence:
    """Growth of R_n = (|q_n|/n!)^{1/n}; bounded growth indicates a unique solution."""

    rates: FloatArray
    window: tuple[int, int]
    window_max: float
    bounded_growth: bool


def default_orders(available: int, max_order: int = _DEFAULT_ANALYSIS.max_order) -> list[int]:
    """Dyadic orders 4, 8, … whose plain sections fit in `available` moments."""

    limit = min((available + 1) // 2, max_order)
    orders = [n for n in (2**k for k in range(2, 13)) if n <= limit]
    return orders or [limit]


def classify(
    q: MomentSequence | RealVector,
    orders: list[int] | None = None,
    tol: float | None = None,
    *,
    analysis: AnalysisConfig | None = None,
) -> ClassificationReport:
    """Classify the Hankel form of `q`.

    PSD verdicts come from every requested order with shifts 0 and 1 (shift 1
    only where enough moments exist).
    """

    seq = as_moment_sequence(q)
    analysis = analysis or _DEFAULT_ANALYSIS
    tol = analysis.psd_tolerance if tol is None else tol
    if len(seq) < MIN_CLASSIFY_MOMENTS:
        raise ValidationError.insufficient_moments(MIN_CLASSIFY_MOMENTS, len(seq))
    orders = sorted(set(orders)) if orders else default_orders(len(seq), analysis.max_order)
    for order in orders:
        seq.require(required_moments(order))

    evidence = _psd_evidence(seq, orders, tol)
    psd = all(item.passed for item in evidence if item.shift == 0)
    shifted = [item for item in evidence if item.shift == 1]
    stieltjes = all(item.passed for item in evidence) if shifted else None

    if seq.decay is not None and seq.has_decay:
        logger.info("classify: symbolic mode (%s)", seq.decay.to_symbol())
        return _symbolic(seq, seq.decay, psd, stieltjes, evidence)
    logger.info("classify: heuristic mode over %d moments", len(seq))
    return _heuristic(seq, psd, stieltjes, evidence, analysis)


def determinacy_check(
    q: MomentSequence | RealVector | None = None,
    *,
    log_abs: RealVector | None = None,
) -> DeterminacyEvidence:
    """Tabulate R_n = (|q_n|/n!)^{1/n} for n ≥ 1 in log space.

    Pass either moments or their log-magnitudes (for sequences that
    overflow double precision).
    """

    if log_abs is None:
        if q is None:
            raise ValidationError.argument_out_of_range("q", None, "moments or log-moments")
        with np.errstate(divide="ignore"):
            logs = np.log(np.abs(as_moment_sequence(q).values))
    else:
        logs = np.asarray(log_abs, dtype=np.float64)
        if logs.ndim != 1 or np.any(np.isnan(logs)) or np.any(np.isposinf(logs)):
            raise ValidationError.non_finite_entries("log-moments")
    if logs.size < 3:
        raise ValidationError.insufficient_moments(3, int(logs.size))
    n = np.arange(1, logs.size, dtype=np.float64)
    rates = np.exp((logs[1:] - gammaln(n + 1.0)) / n)
    start = (logs.size - 1) // 2
    window = rates[start:]
    window_max = float(window.max())
    bounded = window_max <= GROWTH_FACTOR * float(window[0]) or window_max == 0.0
    return DeterminacyEvidence(
        rates=rates, window=(start + 1, logs.size), window_max=window_max, bounded_growth=bool(bounded)
    )


def _psd_evidence(seq: MomentSequence, orders: list[int], tol: float) -> tuple[PsdEvidence, ...]:
    items: list[PsdEvidence] = []
    for order in orders:
        for shift in (0, 1):
            if required_moments(order, shift) > len(seq):
                continue
            passed, lam_min = is_psd(hankel_section(seq, order, shift), tol)
            items.append(PsdEvidence(order=order, shift=shift, min_eigenvalue=lam_min, passed=passed))
    return tuple(items)


def _symbolic(
    seq: MomentSequence, decay: Decay, psd: bool, stieltjes: bool | None, evidence: tuple[PsdEvidence, ...]
) -> ClassificationReport:
    kind = decay.kind
    radius: float | None = 1.0
    endpoint_atoms: bool | None = False
    closable: bool | None
    bounded: bool | None
    compact: bool | None
    if kind is DecayKind.TENDS_TO_ZERO:
        closable, bounded, compact = True, False, False
    elif kind is DecayKind.BIG_O_INVERSE:
        closable, bounded, compact = True, True, False
    elif kind is DecayKind.LITTLE_O_INVERSE:
        closable, bounded, compact = True, True, True
        radius = seq.origin.radius if seq.origin is not None else None
        endpoint_atoms = None if radius is None else False
    elif kind is DecayKind.BOUNDED_NOT_DECAYING:
        closable, bounded, compact = False, False, False
        endpoint_atoms = True
    elif kind is DecayKind.UNBOUNDED:
        closable, bounded, compact = False, False, False
        radius = seq.origin.radius if seq.origin is not None else math.inf
        endpoint_atoms = None
    else:
        rate = float(decay.rate or 0.0)
        radius = rate
        exact = kind is DecayKind.BIG_O_GEOMETRIC
        endpoint_atoms = exact
        if rate < 1.0:
            closable, bounded, compact = True, True, True
        elif exact:
            closable, bounded, compact = False, False, False
        elif rate == 1.0:
            closable, bounded, compact = True, None, None
        else:
            closable, bounded, compact = None, None, None
    return ClassificationReport(
        positive_semidefinite=psd,
        closable=closable,
        bounded=bounded,
        compact=compact,
        support_radius=radius,
        stieltjes=stieltjes,
        mode="symbolic",
        confidence=1.0,
        psd_evidence=evidence,
        endpoint_atoms=endpoint_atoms,
        stieltjes_radius=radius if stieltjes and radius is not None and math.isfinite(radius) else None,
        decay=decay,
    )


def _heuristic(
    seq: MomentSequence,
    psd: bool,
    stieltjes: bool | None,
    evidence: tuple[PsdEvidence, ...],
    analysis: AnalysisConfig,
) -> ClassificationReport:
    if seq.is_zero():
        return ClassificationReport(
            positive_semidefinite=psd,
            closable=True,
            bounded=True,
            compact=True,
            support_radius=0.0,
            stieltjes=stieltjes,
            mode="heuristic",
            confidence=1.0,
            psd_evidence=evidence,
            endpoint_atoms=False,
            notes=("zero sequence: every verdict holds vacuously",),
        )

    values = np.abs(seq.values)
    count = values.size
    start = max(count // 2, 1)
    n = np.arange(start, count)
    window = values[start:]
    nonzero = window > 0
    reference = float(values[0]) if values[0] > 0 else float(values.max())

    if np.count_nonzero(nonzero) < 2:
        # the tail vanishes identically: finitely supported moments, atom at 0
        return ClassificationReport(
            positive_semidefinite=psd,
            closable=True,
            bounded=True,
            compact=True,
            support_radius=0.0,
            stieltjes=stieltjes,
            mode="heuristic",
            confidence=1.0,
            psd_evidence=evidence,
            endpoint_atoms=bool(values[0] > 0 and not np.any(values[1:])),
            stieltjes_radius=0.0 if stieltjes else None,
            notes=(HEURISTIC_NOTE,),
        )

    log_n = np.log(n[nonzero].astype(np.float64))
    log_q = np.log(window[nonzero])
    loglog = linregress(log_n, log_q)
    slope = float(loglog.slope)
    r_squared = float(loglog.rvalue**2) if np.isfinite(loglog.rvalue) else 0.0
    log_radius, power = _geometric_fit(n[nonzero].astype(np.float64), log_q)
    radius = float(math.exp(log_radius))

    weighted = n * window
    start_weighted = float(weighted[nonzero][0])
    end_weighted = float(weighted[nonzero][-1])
    max_abs = float(window.max())

    closable = max_abs < analysis.closable_fraction * reference or slope <= -analysis.slope_margin
    bounded = slope <= -1.0 + analysis.slope_margin and float(weighted.max()) <= analysis.compact_ratio * max(
        start_weighted, np.finfo(np.float64).tiny
    )
    compact = bounded and start_weighted >= analysis.compact_ratio * end_weighted
    closable = closable or bounded
    # atoms at ±a leave no polynomial factor on top of aⁿ
    endpoint_atoms = power > -analysis.slope_margin
    logger.debug(
        "heuristic fit: window=[%d, %d) slope=%.4f r2=%.4f radius=%.6f", start, count, slope, r_squared, radius
    )
    return ClassificationReport(
        positive_semidefinite=psd,
        closable=bool(closable),
        bounded=bool(bounded),
        compact=bool(compact),
        support_radius=radius,
        stieltjes=stieltjes,
        mode="heuristic",
        confidence=min(max(r_squared, 0.0), 1.0),
        psd_evidence=evidence,
        endpoint_atoms=bool(endpoint_atoms),
        stieltjes_radius=radius if stieltjes else None,
        fit=FitEvidence(
            window=(start, count),
            loglog_slope=slope,
            r_squared=r_squared,
            max_abs=max_abs,
            start_weighted=start_weighted,
            end_weighted=end_weighted,
        ),
        notes=(HEURISTIC_NOTE,),
    )


def _geometric_fit(n: FloatArray, log_q: FloatArray) -> tuple[float, float]:
    """Least-squares fit log|q_n| ≈ c + n·log a + p·log n; returns (log a, p)."""

    design = np.column_stack((np.ones_like(n), n, np.log(n)))
    coeffs, *_ = np.linalg.lstsq(design, log_q, rcond=None)
    return float(coeffs[1]), float(coeffs[2])


__all__ = [
    "GROWTH_FACTOR",
    "MIN_CLASSIFY_MOMENTS",
    "ClassificationReport",
    "DeterminacyEvidence",
    "FitEvidence",
    "Mode",
    "PsdEvidence",
    "classify",
    "default_orders",
    "determinacy_check",
]
