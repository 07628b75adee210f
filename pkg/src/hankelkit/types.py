"""Shared types used across the toolkit."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Literal

import numpy as np
from numpy.typing import NDArray

FloatArray = NDArray[np.float64]
RealVector = Sequence[float] | FloatArray

Integrand = Callable[[FloatArray], FloatArray]

Interval = tuple[float, float]

Side = Literal["left", "right"]
Shift = Literal[0, 1]
DomainTag = Literal["mu_interval", "lambda_halfline", "t_halfline"]

__all__ = [
    "DomainTag",
    "FloatArray",
    "Integrand",
    "Interval",
    "RealVector",
    "Shift",
    "Side",
]
