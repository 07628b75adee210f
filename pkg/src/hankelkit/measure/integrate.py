"""Integration against a measure: masses, moments and tail masses."""

from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

import numpy as np

from ..config import QuadratureConfig
from ..exceptions import QuadratureError, ValidationError
from ..quadrature import integrate, integrate_halfline, integrate_log_scale
from ..types import FloatArray, Integrand, Side
from ..validation import validate_non_negative_int, validate_open_unit, validate_positive_int
from .core import DensityPiece, Hint, Measure

if TYPE_CHECKING:
    from ..expressions import Expression
    from ..moments.sequence import MomentSequence

logger = logging.getLogger(__name__)

MOMENT_OVERFLOW = 1e300
LOG_MOMENT_OVERFLOW = math.log(MOMENT_OVERFLOW)

_DEFAULT_CONFIG = QuadratureConfig()


def integrate_against(m: Measure, f: Integrand, cfg: QuadratureConfig | None = None) -> FloatArray:
    """Return Σ wᵢ f(xᵢ) + Σ ∫ f(x) ρ(x) dx for a vectorized `f`.

    `f` may return a batch of integrands stacked on leading axes; the result
    has that leading shape.
    """

    cfg = cfg or _DEFAULT_CONFIG
    total: FloatArray | float = 0.0
    if m.atoms:
        locations = np.array([atom.location for atom in m.atoms])
        weights = np.array([atom.weight for atom in m.atoms])
        total = np.asarray(f(locations), dtype=np.float64) @ weights
    for piece in m.pieces:
        total = total + _integrate_piece(piece, f, cfg)
    return np.asarray(total, dtype=np.float64)


def total_mass(m: Measure, cfg: QuadratureConfig | None = None) -> float:
    """M(support) = Σ weights + Σ ∫ densities."""

    return float(integrate_against(m, _ones, cfg))


def moment(m: Measure, n: int, cfg: QuadratureConfig | None = None) -> float:
    """q_n = ∫ μⁿ dM(μ); fails loudly instead of returning an overflowed value."""

    n = validate_non_negative_int("n", n)
    cfg = cfg or _DEFAULT_CONFIG
    if m.moment_rule is not None:
        sign, log_abs = m.moment_rule.log_moment(n, cfg)
        logger.debug("family %s: moment %d from log-space rule", m.family, n)
        if log_abs > LOG_MOMENT_OVERFLOW:
            raise QuadratureError.moment_overflow(n)
        return sign * math.exp(log_abs)

    def power(x: FloatArray) -> FloatArray:
        with np.errstate(over="ignore"):
            return x**n

    value = float(integrate_against(m, power, cfg))
    if not math.isfinite(value) or abs(value) > MOMENT_OVERFLOW:
        raise QuadratureError.moment_overflow(n)
    return value


def log_moment(m: Measure, n: int, cfg: QuadratureConfig | None = None) -> tuple[float, float]:
    """Return (sign, log|q_n|); uses the family's log-space rule when present."""

    n = validate_non_negative_int("n", n)
    cfg = cfg or _DEFAULT_CONFIG
    if m.moment_rule is not None:
        return m.moment_rule.log_moment(n, cfg)
    value = moment(m, n, cfg)
    if value == 0.0:
        return 0.0, -math.inf
    return math.copysign(1.0, value), math.log(abs(value))


def moments(m: Measure, count: int, cfg: QuadratureConfig | None = None) -> MomentSequence:
    """(q_0, …, q_{count−1}) computed in one shared quadrature pass."""

    from ..moments.sequence import MomentSequence

    count = validate_positive_int("count", count)
    cfg = cfg or _DEFAULT_CONFIG
    if m.moment_rule is not None:
        values = np.array([moment(m, n, cfg) for n in range(count)])
    else:
        powers = np.arange(count, dtype=np.float64)[:, None]

        def batch(x: FloatArray) -> FloatArray:
            with np.errstate(over="ignore", invalid="ignore"):
                return np.power(x[None, :], powers)

        values = np.asarray(integrate_against(m, batch, cfg), dtype=np.float64).reshape(count)
        overflowed = np.flatnonzero(~np.isfinite(values) | (np.abs(values) > MOMENT_OVERFLOW))
        if overflowed.size:
            raise QuadratureError.moment_overflow(int(overflowed[0]))
    return MomentSequence(values=values, decay=m.decay, origin=m)


def log_moments(m: Measure, count: int, cfg: QuadratureConfig | None = None) -> tuple[FloatArray, FloatArray]:
    """Signs and log-magnitudes of the first `count` moments."""

    count = validate_positive_int("count", count)
    pairs = [log_moment(m, n, cfg) for n in range(count)]
    return np.array([p[0] for p in pairs]), np.array([p[1] for p in pairs])


def tail_mass(m: Measure, side: Side, eps: float, cfg: QuadratureConfig | None = None) -> float:
    """M((1−ε, 1)) for the right side, M((−1, −1+ε)) for the left side.

    Both intervals are open, so atoms at ±1 are excluded.
    """

    eps = validate_open_unit("eps", eps)
    lo_support, hi_support = m.declared_support
    if lo_support < -1.0 or hi_support > 1.0:
        raise ValidationError.support_not_in_unit_interval()
    if side == "right":
        lower, upper = 1.0 - eps, 1.0
    elif side == "left":
        lower, upper = -1.0, -1.0 + eps
    else:
        raise ValidationError.argument_out_of_range("side", side, "'left' or 'right'")
    cfg = cfg or _DEFAULT_CONFIG
    mass = math.fsum(atom.weight for atom in m.atoms if lower < atom.location < upper)
    for piece in m.pieces:
        sub = _clip_piece(piece, lower, upper)
        if sub is not None:
            mass += float(_integrate_piece(sub, _ones, cfg))
    return mass


def _clip_piece(piece: DensityPiece, lower: float, upper: float) -> DensityPiece | None:
    a, b = max(piece.a, lower), min(piece.b, upper)
    if a >= b:
        return None
    if piece.hint is Hint.SINGULAR_LEFT and a == piece.a:
        return DensityPiece(a, b, piece.density, Hint.SINGULAR_LEFT)
    if piece.hint is Hint.SINGULAR_RIGHT and b == piece.b:
        return DensityPiece(a, b, piece.density, Hint.SINGULAR_RIGHT, piece.reflected)
    return DensityPiece(a, b, piece.density)


def _integrate_piece(piece: DensityPiece, f: Integrand, cfg: QuadratureConfig) -> FloatArray:
    density = piece.density

    def integrand(x: FloatArray) -> FloatArray:
        return np.asarray(f(x), dtype=np.float64) * density(x)

    if piece.hint is Hint.LOG_SCALE:
        logger.debug("log-scale piece on [0, inf)")
        return integrate_log_scale(integrand, cfg)
    if not piece.is_bounded:
        logger.debug("unbounded piece on [%g, inf): dyadic panels", piece.a)
        return integrate_halfline(integrand, piece.a, cfg)
    if piece.reflected is not None:
        return _integrate_reflected(piece, piece.reflected, f, cfg)
    singular = {Hint.SINGULAR_LEFT: "left", Hint.SINGULAR_RIGHT: "right"}.get(piece.hint, "none")
    return integrate(integrand, piece.a, piece.b, cfg, singular=singular)


def _integrate_reflected(
    piece: DensityPiece, reflected: Expression, f: Integrand, cfg: QuadratureConfig
) -> FloatArray:
    b = piece.b

    def integrand(d: FloatArray) -> FloatArray:
        return np.asarray(f(b - d), dtype=np.float64) * reflected(d)

    return integrate(integrand, 0.0, b - piece.a, cfg, singular="left")


def _ones(x: FloatArray) -> FloatArray:
    return np.ones_like(x)


__all__ = [
    "LOG_MOMENT_OVERFLOW",
    "MOMENT_OVERFLOW",
    "integrate_against",
    "log_moment",
    "log_moments",
    "moment",
    "moments",
    "tail_mass",
    "total_mass",
]
