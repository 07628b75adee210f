"""Closed-form expressions used as densities, test functions and operator images."""

from .base import BaseExpression, Expression
from .grammar import SympyExpression, parse_expression
from .library import (
    Composite,
    Constant,
    ExponentialWeighted,
    Function,
    LaguerreSeries,
    MobiusPullback,
    Polynomial,
    Truncated,
    mobius_lambda,
    mobius_mu,
)

__all__ = [
    "BaseExpression",
    "Composite",
    "Constant",
    "ExponentialWeighted",
    "Expression",
    "Function",
    "LaguerreSeries",
    "MobiusPullback",
    "Polynomial",
    "SympyExpression",
    "Truncated",
    "mobius_lambda",
    "mobius_mu",
    "parse_expression",
]
