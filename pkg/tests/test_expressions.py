from __future__ import annotations

import math

import numpy as np
import pytest

from hankelkit.exceptions import ValidationError
from hankelkit.expressions import (
    Composite,
    Constant,
    ExponentialWeighted,
    Expression,
    Function,
    LaguerreSeries,
    MobiusPullback,
    Polynomial,
    Truncated,
    mobius_lambda,
    mobius_mu,
    parse_expression,
)


def test_constant_broadcasts() -> None:
    values = Constant(2.5)(np.zeros(4))
    assert values.tolist() == [2.5] * 4


def test_polynomial_horner() -> None:
    poly = Polynomial([1.0, -2.0, 0.5])
    assert poly.degree == 2
    assert float(poly(2.0)) == pytest.approx(1.0 - 4.0 + 2.0)


def test_function_wraps_callable() -> None:
    expr = Function(np.cos, label="cos", decay_rate=None)
    assert isinstance(expr, Expression)
    assert expr.describe() == "cos"
    assert float(expr(0.0)) == 1.0


def test_exponential_weighted_sets_envelope() -> None:
    expr = ExponentialWeighted(Polynomial([0.0, 1.0]), 0.5)
    assert expr.decay_rate == 0.5
    assert expr.degree == 1
    assert float(expr(2.0)) == pytest.approx(2.0 * math.exp(-1.0))


def test_truncated_is_zero_outside() -> None:
    expr = Truncated(Constant(1.0), 0.0, 1.0)
    assert expr.support_end == 1.0
    assert expr(np.array([-0.5, 0.5, 1.5])).tolist() == [0.0, 1.0, 0.0]


def test_laguerre_series_low_terms() -> None:
    t = np.array([0.0, 1.0, 3.0])
    assert np.allclose(LaguerreSeries([1.0])(t), np.exp(-t / 2))
    assert np.allclose(LaguerreSeries([0.0, 1.0])(t), (1.0 - t) * np.exp(-t / 2))
    assert LaguerreSeries([1.0]).decay_rate == 0.5


def test_mobius_maps_are_inverse() -> None:
    lam = np.array([0.0, 0.5, 1.0, 20.0])
    assert np.allclose(mobius_lambda(mobius_mu(lam)), lam)
    assert float(mobius_mu(0.5)) == 0.0
    assert float(mobius_lambda(-0.5)) == pytest.approx(1.0 / 6.0)


def test_mobius_pullback_of_constant() -> None:
    expr = MobiusPullback(Constant(1.0))
    lam = np.array([0.1, 1.0, 7.0])
    assert np.allclose(expr(lam), 1.0 / (lam + 0.5))


def test_composite_describes_itself() -> None:
    expr = Composite(Polynomial([0.0, 1.0]), mobius_mu, label="mu(lambda)")
    assert float(expr(0.5)) == 0.0
    assert expr.describe().endswith("mu(lambda)")


def test_parse_expression_with_params() -> None:
    pytest.importorskip("sympy")
    expr = parse_expression("a*x**2 + exp(-x)", {"a": 3.0})
    assert float(expr(1.0)) == pytest.approx(3.0 + math.exp(-1.0))
    assert expr.text == "a*x**2 + exp(-x)"


def test_parse_expression_constant_broadcasts() -> None:
    pytest.importorskip("sympy")
    expr = parse_expression("1")
    assert expr(np.linspace(0.0, 1.0, 5)).tolist() == [1.0] * 5


def test_parse_expression_rejects_outside_grammar() -> None:
    pytest.importorskip("sympy")
    for text in ("__import__('os')", "y + x", "gamma(x)", "x; 1", ""):
        with pytest.raises(ValidationError):
            parse_expression(text)
