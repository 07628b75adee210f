"""Laguerre polynomials, the Laguerre–Laplace identity and Gauss–Legendre rules."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np
from scipy.special import roots_legendre

from .exceptions import ValidationError
from .types import FloatArray
from .validation import is_finite_real, validate_non_negative_int

MAX_LAGUERRE_DEGREE = 128
MAX_GAUSS_LEGENDRE_POINTS = 128


@dataclass(frozen=True)
class LaguerreEval:
    """Forward three-term recurrence for the Laguerre polynomials 𝖫_n.

    (n+1)𝖫_{n+1}(t) = (2n+1−t)𝖫_n(t) − n𝖫_{n−1}(t), 𝖫_0 = 1, 𝖫_1 = 1 − t.
    """

    max_degree: int = MAX_LAGUERRE_DEGREE
    method: Literal["three-term recurrence"] = "three-term recurrence"

    def __call__(self, n: int, t: float | FloatArray) -> float | FloatArray:
        values = self.table(n, t)
        result = values[n]
        return float(result) if np.ndim(result) == 0 else result

    def table(self, n_max: int, t: float | FloatArray) -> FloatArray:
        """Return 𝖫_0(t), …, 𝖫_{n_max}(t) stacked along the first axis."""

        n_max = validate_non_negative_int("n", n_max)
        if n_max > self.max_degree:
            raise ValidationError.degree_too_large(n_max, self.max_degree)
        points = np.asarray(t, dtype=np.float64)
        if np.any(points < 0) or not np.all(np.isfinite(points)):
            raise ValidationError.argument_out_of_range("t", t, "finite values >= 0")
        out = np.empty((n_max + 1, *points.shape), dtype=np.float64)
        out[0] = 1.0
        if n_max >= 1:
            out[1] = 1.0 - points
        for k in range(1, n_max):
            out[k + 1] = ((2 * k + 1 - points) * out[k] - k * out[k - 1]) / (k + 1)
        return out


_DEFAULT_EVAL = LaguerreEval()


def laguerre(n: int, t: float | FloatArray) -> float | FloatArray:
    """Evaluate 𝖫_n(t) = (1/n!) eᵗ dⁿ/dtⁿ (e^{−t} tⁿ) for t ≥ 0."""

    return _DEFAULT_EVAL(n, t)


def laguerre_table(n_max: int, t: float | FloatArray) -> FloatArray:
    return _DEFAULT_EVAL.table(n_max, t)


def laguerre_laplace_closed(n: int, lam: float) -> float:
    """Closed form of ∫₀^∞ 𝖫_n(t) e^{−(1/2+λ)t} dt = (λ+1/2)^{−1} ((2λ−1)/(2λ+1))ⁿ."""

    n = validate_non_negative_int("n", n)
    if not is_finite_real(lam) or lam <= -0.5:
        raise ValidationError.argument_out_of_range("lambda", lam, "a real > -1/2")
    lam = float(lam)
    return (lam + 0.5) ** -1 * ((2.0 * lam - 1.0) / (2.0 * lam + 1.0)) ** n


def gauss_legendre(k: int) -> tuple[FloatArray, FloatArray]:
    """Return the k-point Gauss–Legendre nodes (ascending) and weights on [−1, 1]."""

    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 1 <= k <= MAX_GAUSS_LEGENDRE_POINTS:
        raise ValidationError.argument_out_of_range("k", k, f"an integer in [1, {MAX_GAUSS_LEGENDRE_POINTS}]")
    nodes, weights = _cached_rule(int(k))
    return nodes.copy(), weights.copy()


@lru_cache(maxsize=None)
def _cached_rule(k: int) -> tuple[FloatArray, FloatArray]:
    nodes, weights = roots_legendre(k)
    nodes = np.asarray(nodes, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    # symmetrize so the rule is exactly even
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


__all__ = [
    "MAX_GAUSS_LEGENDRE_POINTS",
    "MAX_LAGUERRE_DEGREE",
    "LaguerreEval",
    "gauss_legendre",
    "laguerre",
    "laguerre_laplace_closed",
    "laguerre_table",
]
