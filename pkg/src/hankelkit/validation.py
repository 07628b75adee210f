"""Shared argument validation helpers."""

from __future__ import annotations

import math

import numpy as np

from .exceptions import ValidationError
from .types import FloatArray, RealVector


def is_finite_real(value: object) -> bool:
    return isinstance(value, (int, float, np.integer, np.floating)) and not isinstance(value, bool) and math.isfinite(value)


def validate_non_negative_int(name: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 0:
        raise ValidationError.argument_out_of_range(name, value, "a non-negative integer")
    return int(value)


def validate_positive_int(name: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
        raise ValidationError.argument_out_of_range(name, value, "a positive integer")
    return int(value)


def validate_open_unit(name: str, value: object) -> float:
    if not is_finite_real(value) or not 0.0 < float(value) < 1.0:
        raise ValidationError.argument_out_of_range(name, value, "a real in (0, 1)")
    return float(value)


def validate_interval(a: float, b: float, *, allow_infinite: bool = False) -> None:
    if math.isnan(a) or math.isnan(b) or a >= b:
        raise ValidationError.invalid_interval(a, b)
    if not allow_infinite and not (math.isfinite(a) and math.isfinite(b)):
        raise ValidationError.invalid_interval(a, b)


def as_finite_vector(name: str, values: RealVector) -> FloatArray:
    array = np.asarray(values, dtype=np.float64)
    if array.ndim != 1:
        raise ValidationError.shape_mismatch(f"{name} must be one-dimensional")
    if not np.all(np.isfinite(array)):
        raise ValidationError.non_finite_entries(name)
    return array


def as_finite_matrix(name: str, values: object) -> FloatArray:
    array = np.asarray(values, dtype=np.float64)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise ValidationError.shape_mismatch(f"{name} must be a square matrix")
    if not np.all(np.isfinite(array)):
        raise ValidationError.non_finite_entries(name)
    return array


__all__ = [
    "as_finite_matrix",
    "as_finite_vector",
    "is_finite_real",
    "validate_interval",
    "validate_non_negative_int",
    "validate_open_unit",
    "validate_positive_int",
]
