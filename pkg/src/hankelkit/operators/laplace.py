"""The Laplace transform (ℬf)(λ) = ∫₀^∞ e^{−tλ} f(t) dt and its adjoint."""

from __future__ import annotations

import logging
import math

import numpy as np

from ..config import QuadratureConfig
from ..exceptions import QuadratureError, ValidationError
from ..expressions import Expression
from ..measure import Measure, integrate_against
from ..quadrature import exponential_cutoff, integrate, integrate_halfline
from ..types import FloatArray, RealVector
from ..validation import as_finite_vector, is_finite_real
from .coefficients import GridFunction

logger = logging.getLogger(__name__)

_DEFAULT_CONFIG = QuadratureConfig()
_PANEL_WIDTH = 4.0


def laplace(f: Expression | GridFunction, lam: float, cfg: QuadratureConfig | None = None) -> float:
    """(ℬf)(λ) for one λ.

    Compactly supported `f` (a `GridFunction` on the t half-line, or an
    expression with finite `support_end`) accepts λ ≥ 0. Otherwise the
    integral is truncated where the envelope e^{−(λ+c)t}·poly(t) falls below
    1e−18, c being the expression's `decay_rate`; without a known rate the
    half-line is covered by growing panels with divergence detection.
    """

    if not is_finite_real(lam):
        raise ValidationError.argument_out_of_range("lambda", lam, "a finite real")
    return float(laplace_many(f, [float(lam)], cfg)[0])


def laplace_many(f: Expression | GridFunction, lams: RealVector, cfg: QuadratureConfig | None = None) -> FloatArray:
    """(ℬf)(λ) for every λ in `lams`, sharing one quadrature pass."""

    cfg = cfg or _DEFAULT_CONFIG
    grid = as_finite_vector("lambda", lams)
    if grid.size == 0:
        return np.zeros(0)
    start, end = _support(f)

    def integrand(t: FloatArray) -> FloatArray:
        return np.exp(-grid[:, None] * t[None, :]) * np.asarray(f(t), dtype=np.float64)[None, :]

    if math.isfinite(end):
        if np.any(grid < 0):
            raise ValidationError.argument_out_of_range("lambda", float(grid.min()), "a real >= 0")
        return integrate(integrand, start, end, cfg, breakpoints=_panel_edges(start, end))

    rate = getattr(f, "decay_rate", None)
    slowest = float(grid.min())
    if rate is not None and slowest + rate > 0:
        cutoff = exponential_cutoff(slowest + rate, int(getattr(f, "degree", 0)))
        logger.debug("laplace: truncating at t=%.3f (envelope rate %.3f)", cutoff, slowest + rate)
        return integrate(integrand, 0.0, cutoff, cfg, breakpoints=_panel_edges(0.0, cutoff))
    if rate is None and slowest > 0:
        return integrate_halfline(integrand, 0.0, cfg)
    raise QuadratureError.divergent(f"Laplace transform at lambda={slowest} of a function without decay")


def laplace_adjoint(
    sigma: Measure,
    v: Expression | GridFunction,
    t: float,
    cfg: QuadratureConfig | None = None,
) -> float:
    """(ℬ*v)(t) = ∫₀^∞ e^{−tλ} v(λ) dΣ(λ) for t > 0."""

    if not is_finite_real(t) or t <= 0:
        raise ValidationError.argument_out_of_range("t", t, "a real > 0")
    lo, _ = sigma.declared_support
    if lo < 0:
        raise ValidationError.argument_out_of_range("sigma", sigma.declared_support, "a measure on [0, inf)")

    def integrand(lam: FloatArray) -> FloatArray:
        return np.exp(-t * lam) * np.asarray(v(lam), dtype=np.float64)

    value = float(integrate_against(sigma, integrand, cfg))
    if not math.isfinite(value):
        raise QuadratureError.divergent(f"adjoint Laplace transform at t={t}")
    return value


def _support(f: Expression | GridFunction) -> tuple[float, float]:
    if isinstance(f, GridFunction):
        if f.domain != "t_halfline":
            raise ValidationError.grid_outside_domain("t_halfline")
        return f.support
    return 0.0, float(getattr(f, "support_end", math.inf))


def _panel_edges(start: float, end: float) -> FloatArray:
    count = max(1, math.ceil((end - start) / _PANEL_WIDTH))
    return np.linspace(start, end, count + 1)


__all__ = ["laplace", "laplace_adjoint", "laplace_many"]
