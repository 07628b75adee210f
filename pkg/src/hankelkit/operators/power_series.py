"""The power-series operator (𝒜g)(μ) = Σ g_n μⁿ, its quadratic form and its adjoint."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from ..config import QuadratureConfig
from ..exceptions import ValidationError
from ..expressions import Expression, Polynomial
from ..measure import Measure, integrate_against
from ..moments import MomentSequence, as_moment_sequence, hankel_section
from ..types import FloatArray, RealVector
from ..validation import validate_positive_int
from .coefficients import CoeffVector, GridFunction

logger = logging.getLogger(__name__)

SQUARE_SUMMABLE_RATIO = 0.75


@dataclass(frozen=True, eq=False)
class AdjointMoments:
    """u_n = ∫ u(μ) μⁿ dM(μ) with partial ℓ² sums as membership evidence.

    `increment_ratio` compares Σ|u_n|² over the last dyadic window with the
    window before it; values near or above 1 mean the sums are not settling.
    """

    values: FloatArray
    partial_l2: float
    last_window_increment: float
    increment_ratio: float

    @property
    def looks_square_summable(self) -> bool:
        return self.increment_ratio < SQUARE_SUMMABLE_RATIO


def eval_power_series(g: CoeffVector | RealVector, mu: float | FloatArray) -> float | FloatArray:
    """Horner evaluation of Σ_{n<K} g_n μⁿ for |μ| ≤ 1."""

    points = np.asarray(mu, dtype=np.float64)
    if not np.all(np.isfinite(points)) or np.any(np.abs(points) > 1.0):
        raise ValidationError.argument_out_of_range("mu", mu, "values with |mu| <= 1")
    value = _horner(CoeffVector.of(g), points)
    return float(value) if value.ndim == 0 else value


def power_series_expression(g: CoeffVector | RealVector) -> Polynomial:
    """𝒜g as an expression, usable against any measure."""

    return Polynomial(CoeffVector.of(g).coefficients)


def form_direct(q: MomentSequence | RealVector, g: CoeffVector | RealVector) -> float:
    """q[g, g] = Σ_{n,m} q_{n+m} g_m g_n from the moments alone."""

    coeffs = CoeffVector.of(g).coefficients
    section = hankel_section(as_moment_sequence(q), coeffs.size, 0)
    return float(coeffs @ section.entries @ coeffs)


def form_integral(m: Measure, g: CoeffVector | RealVector, cfg: QuadratureConfig | None = None) -> float:
    """q[g, g] = ∫ |(𝒜g)(μ)|² dM(μ) by quadrature against `m`."""

    vector = CoeffVector.of(g)

    def integrand(x: FloatArray) -> FloatArray:
        return _horner(vector, x) ** 2

    return float(integrate_against(m, integrand, cfg))


def adjoint_moments(
    m: Measure,
    u: Expression | GridFunction,
    count: int,
    cfg: QuadratureConfig | None = None,
) -> AdjointMoments:
    """(u_0, …, u_{count−1}) computed in one shared quadrature pass."""

    count = validate_positive_int("count", count)
    powers = np.arange(count, dtype=np.float64)[:, None]

    def batch(x: FloatArray) -> FloatArray:
        with np.errstate(over="ignore", invalid="ignore"):
            return np.power(x[None, :], powers) * np.asarray(u(x), dtype=np.float64)[None, :]

    values = np.asarray(integrate_against(m, batch, cfg), dtype=np.float64).reshape(count)
    squares = np.cumsum(values**2)
    half = count // 2
    quarter = count // 4
    last = float(squares[-1] - (squares[half - 1] if half else 0.0))
    previous = float(squares[half - 1] - (squares[quarter - 1] if quarter else 0.0)) if half else 0.0
    ratio = last / previous if previous > 0 else (0.0 if last == 0 else float("inf"))
    logger.debug("adjoint moments: %d values, l2 partial %.6e, window ratio %.4f", count, squares[-1], ratio)
    return AdjointMoments(
        values=values, partial_l2=float(squares[-1]), last_window_increment=last, increment_ratio=ratio
    )


def adjoint_pairing(
    m: Measure,
    g: CoeffVector | RealVector,
    u: Expression | GridFunction,
    cfg: QuadratureConfig | None = None,
) -> tuple[float, float]:
    """Return (∫(𝒜g)(μ) u(μ) dM, Σ g_n u_n); the two agree for finite g."""

    vector = CoeffVector.of(g)

    def integrand(x: FloatArray) -> FloatArray:
        return _horner(vector, x) * np.asarray(u(x), dtype=np.float64)

    lhs = float(integrate_against(m, integrand, cfg))
    rhs = float(vector.coefficients @ adjoint_moments(m, u, len(vector), cfg).values)
    return lhs, rhs


def _horner(g: CoeffVector, x: FloatArray) -> FloatArray:
    return np.asarray(npoly.polyval(x, g.coefficients), dtype=np.float64)


__all__ = [
    "SQUARE_SUMMABLE_RATIO",
    "AdjointMoments",
    "adjoint_moments",
    "adjoint_pairing",
    "eval_power_series",
    "form_direct",
    "form_integral",
    "power_series_expression",
]
