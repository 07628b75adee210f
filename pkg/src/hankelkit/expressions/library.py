"""Numeric expression implementations."""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
from numpy.polynomial import polynomial as npoly

from ..special_functions import laguerre_table
from ..types import FloatArray, RealVector
from ..validation import as_finite_vector
from .base import BaseExpression, Expression


class Constant(BaseExpression):
    """The constant function."""

    def __init__(self, value: float) -> None:
        self.value = float(value)

    def _evaluate(self, x: FloatArray) -> FloatArray:
        return np.full(x.shape, self.value)

    def describe(self) -> str:
        return f"{self.value!r}"


class Polynomial(BaseExpression):
    """Σ c_n xⁿ evaluated by Horner's scheme."""

    def __init__(self, coefficients: RealVector) -> None:
        self.coefficients = as_finite_vector("coefficients", coefficients)
        self.degree = max(len(self.coefficients) - 1, 0)

    def _evaluate(self, x: FloatArray) -> FloatArray:
        if self.coefficients.size == 0:
            return np.zeros(x.shape)
        return npoly.polyval(x, self.coefficients)

    def describe(self) -> str:
        return f"poly[{self.degree}]"


class Function(BaseExpression):
    """Wraps an arbitrary vectorized callable (library use only)."""

    def __init__(
        self,
        func: Callable[[FloatArray], FloatArray],
        *,
        label: str = "function",
        decay_rate: float | None = None,
        degree: int = 0,
        support_end: float = math.inf,
    ) -> None:
        self._func = func
        self.label = label
        self.decay_rate = decay_rate
        self.degree = degree
        self.support_end = support_end

    def _evaluate(self, x: FloatArray) -> FloatArray:
        return self._func(x)

    def describe(self) -> str:
        return self.label


class ExponentialWeighted(BaseExpression):
    """base(t)·e^{−rate·t} on the half-line."""

    def __init__(self, base: Expression, rate: float) -> None:
        self.base = base
        self.rate = float(rate)
        self.decay_rate = self.rate
        self.degree = getattr(base, "degree", 0)

    def _evaluate(self, x: FloatArray) -> FloatArray:
        return self.base(x) * np.exp(-self.rate * x)

    def describe(self) -> str:
        return f"({_describe(self.base)})*exp(-{self.rate!r}*t)"


class Truncated(BaseExpression):
    """base restricted to [lower, upper] and zero elsewhere."""

    def __init__(self, base: Expression, lower: float, upper: float) -> None:
        self.base = base
        self.lower = float(lower)
        self.upper = float(upper)
        self.support_end = self.upper
        self.decay_rate = getattr(base, "decay_rate", None)
        self.degree = getattr(base, "degree", 0)

    def _evaluate(self, x: FloatArray) -> FloatArray:
        inside = (x >= self.lower) & (x <= self.upper)
        values = np.zeros(x.shape)
        if np.any(inside):
            values[inside] = self.base(x[inside])
        return values

    def describe(self) -> str:
        return f"1[{self.lower!r},{self.upper!r}]*({_describe(self.base)})"


class LaguerreSeries(BaseExpression):
    """(Ug)(t) = Σ g_n 𝖫_n(t) e^{−t/2}."""

    decay_rate = 0.5

    def __init__(self, coefficients: RealVector) -> None:
        self.coefficients = as_finite_vector("g", coefficients)
        self.degree = max(len(self.coefficients) - 1, 0)

    def _evaluate(self, t: FloatArray) -> FloatArray:
        if self.coefficients.size == 0:
            return np.zeros(t.shape)
        table = laguerre_table(self.degree, t)
        return np.tensordot(self.coefficients, table, axes=1) * np.exp(-0.5 * t)

    def describe(self) -> str:
        return f"laguerre[{self.degree}]"


class MobiusPullback(BaseExpression):
    """(Vu)(λ) = (λ+1/2)^{−1} u((2λ−1)/(2λ+1)) on the half-line."""

    def __init__(self, inner: Expression) -> None:
        self.inner = inner

    def _evaluate(self, lam: FloatArray) -> FloatArray:
        return self.inner(mobius_mu(lam)) / (lam + 0.5)

    def describe(self) -> str:
        return f"V({_describe(self.inner)})"


class Composite(BaseExpression):
    """outer(inner(x)), used for transported densities."""

    def __init__(self, outer: Expression, inner: Callable[[FloatArray], FloatArray], *, label: str) -> None:
        self.outer = outer
        self.inner = inner
        self.label = label

    def _evaluate(self, x: FloatArray) -> FloatArray:
        return self.outer(self.inner(x))

    def describe(self) -> str:
        return f"{_describe(self.outer)}∘{self.label}"


def mobius_mu(lam: FloatArray | float) -> FloatArray:
    """μ(λ) = (2λ−1)/(2λ+1), mapping [0, ∞) onto [−1, 1)."""

    lam = np.asarray(lam, dtype=np.float64)
    return (2.0 * lam - 1.0) / (2.0 * lam + 1.0)


def mobius_lambda(mu: FloatArray | float) -> FloatArray:
    """λ(μ) = (1+μ)/(2(1−μ)), the inverse of `mobius_mu`."""

    mu = np.asarray(mu, dtype=np.float64)
    return (1.0 + mu) / (2.0 * (1.0 - mu))


def _describe(expr: Expression) -> str:
    describe = getattr(expr, "describe", None)
    return describe() if callable(describe) else type(expr).__name__


__all__ = [
    "Composite",
    "Constant",
    "ExponentialWeighted",
    "Function",
    "LaguerreSeries",
    "MobiusPullback",
    "Polynomial",
    "Truncated",
    "mobius_lambda",
    "mobius_mu",
]
