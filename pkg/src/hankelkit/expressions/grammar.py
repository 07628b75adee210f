"""Closed expression grammar for file-based densities and test functions.

Expressions are strings in the single variable `x` built from numbers,
named parameters, `+ - * / **`, parentheses, `exp`, `log`, `sin`, `cos`,
`sqrt`, `pi` and `E`. Parsing and lambdification use sympy, which is an
optional dependency (`hankelkit[expressions]`).
"""

from __future__ import annotations

import importlib
import re
from collections.abc import Mapping
from typing import Any

import numpy as np

from ..exceptions import ConfigurationError, ValidationError
from ..types import FloatArray
from .base import BaseExpression

VARIABLE = "x"
_FUNCTIONS = ("exp", "log", "sin", "cos", "sqrt")
_CONSTANTS = ("pi", "E")
_ALLOWED_CHARS_RE = re.compile(r"^[0-9A-Za-z_.+\-*/()\s]*$")
_NAME_RE = re.compile(r"(?<![0-9.])[A-Za-z_][A-Za-z0-9_]*")


class SympyExpression(BaseExpression):
    """Expression parsed from the closed grammar and lambdified to numpy."""

    def __init__(self, text: str, params: Mapping[str, float] | None = None) -> None:
        self.text = text
        self.params = dict(params or {})
        sympy = _load_sympy()
        self._expr = _parse(sympy, text, self.params)
        symbol = sympy.Symbol(VARIABLE, real=True)
        self._func = sympy.lambdify(symbol, self._expr, modules="numpy")

    @property
    def sympy_expr(self) -> Any:
        return self._expr

    def _evaluate(self, x: FloatArray) -> FloatArray:
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.asarray(self._func(x), dtype=np.float64)

    def describe(self) -> str:
        return self.text


def parse_expression(text: str, params: Mapping[str, float] | None = None) -> SympyExpression:
    """Parse `text` from the closed grammar, substituting named parameters."""

    if not isinstance(text, str) or not text.strip():
        raise ValidationError.unsupported_expression(str(text), "expression must be a non-empty string")
    return SympyExpression(text, params)


def _parse(sympy: Any, text: str, params: Mapping[str, float]) -> Any:
    if not _ALLOWED_CHARS_RE.match(text):
        raise ValidationError.unsupported_expression(text, "illegal characters")
    allowed_names = {VARIABLE, *_FUNCTIONS, *_CONSTANTS, *params}
    for name in _NAME_RE.findall(text):
        if name not in allowed_names:
            raise ValidationError.unsupported_expression(text, f"unknown name '{name}'")
    symbol = sympy.Symbol(VARIABLE, real=True)
    local_dict: dict[str, Any] = {
        VARIABLE: symbol,
        "exp": sympy.exp,
        "log": sympy.log,
        "sin": sympy.sin,
        "cos": sympy.cos,
        "sqrt": sympy.sqrt,
        "pi": sympy.pi,
        "E": sympy.E,
    }
    for name, value in params.items():
        local_dict[name] = sympy.Float(float(value))
    try:
        expr = sympy.parse_expr(text, local_dict=local_dict, global_dict={"__builtins__": {}, **_sympy_globals(sympy)})
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as exc:
        raise ValidationError.unsupported_expression(text, "could not be parsed") from exc
    if expr.free_symbols - {symbol}:
        raise ValidationError.unsupported_expression(text, "free symbols other than x")
    _check_tree(sympy, expr, text)
    return expr


def _sympy_globals(sympy: Any) -> dict[str, Any]:
    return {name: getattr(sympy, name) for name in ("Integer", "Float", "Rational", "Symbol")}


def _check_tree(sympy: Any, expr: Any, text: str) -> None:
    allowed_functions = (sympy.exp, sympy.log, sympy.sin, sympy.cos)
    for node in sympy.preorder_traversal(expr):
        if node.is_Symbol or node.is_Number or node.is_NumberSymbol:
            continue
        if node.is_Add or node.is_Mul or node.is_Pow:
            continue
        if isinstance(node, allowed_functions):
            continue
        raise ValidationError.unsupported_expression(text, f"'{node.func.__name__}' is outside the grammar")


def _load_sympy() -> Any:
    try:
        return importlib.import_module("sympy")
    except ImportError as exc:  # pragma: no cover - optional dependency
        raise ConfigurationError.missing_optional_dependency("expressions") from exc


__all__ = ["VARIABLE", "SympyExpression", "parse_expression"]
