"""Expression interfaces."""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from typing import Protocol, runtime_checkable

import numpy as np

from ..types import FloatArray


@runtime_checkable
class Expression(Protocol):
    """Protocol for closed-form real functions of one variable."""

    def __call__(self, x: FloatArray) -> FloatArray:
        """Evaluate the expression at every point of `x`."""


class BaseExpression(ABC):
    """Base class for toolkit expressions.

    `decay_rate` and `degree` describe an envelope |f(t)| ≲ poly_degree(t)·e^{−rate·t}
    on the half-line and are used to truncate Laplace-type integrals.
    `support_end` is the right end of the support when it is compact.
    """

    decay_rate: float | None = None
    degree: int = 0
    support_end: float = math.inf

    def __call__(self, x: FloatArray | float) -> FloatArray:
        points = np.asarray(x, dtype=np.float64)
        values = np.asarray(self._evaluate(points), dtype=np.float64)
        return np.broadcast_to(values, points.shape) if values.shape != points.shape else values

    @abstractmethod
    def _evaluate(self, x: FloatArray) -> FloatArray:
        """Evaluate on an array of points."""

    def describe(self) -> str:
        return type(self).__name__


__all__ = ["BaseExpression", "Expression"]
