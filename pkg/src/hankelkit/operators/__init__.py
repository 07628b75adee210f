"""Power-series, Laplace, Möbius and Laguerre operators."""

from .coefficients import CoeffVector, GridFunction
from .laplace import laplace, laplace_adjoint, laplace_many
from .power_series import (
    AdjointMoments,
    adjoint_moments,
    adjoint_pairing,
    eval_power_series,
    form_direct,
    form_integral,
    power_series_expression,
)
from .transforms import DEFAULT_LAMBDA_GRID, IntertwiningReport, laguerre_expand_U, mobius_V, verify_intertwining

__all__ = [
    "DEFAULT_LAMBDA_GRID",
    "AdjointMoments",
    "CoeffVector",
    "GridFunction",
    "IntertwiningReport",
    "adjoint_moments",
    "adjoint_pairing",
    "eval_power_series",
    "form_direct",
    "form_integral",
    "laguerre_expand_U",
    "laplace",
    "laplace_adjoint",
    "laplace_many",
    "mobius_V",
    "power_series_expression",
    "verify_intertwining",
]
