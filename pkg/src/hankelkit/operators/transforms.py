"""The Möbius map V, the Laguerre expansion U and the intertwining V𝒜 = ℬU."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..config import QuadratureConfig
from ..exceptions import ValidationError
from ..expressions import Expression, Function, LaguerreSeries, MobiusPullback, mobius_lambda
from ..measure import Measure, transport_to_sigma
from ..special_functions import MAX_LAGUERRE_DEGREE, gauss_legendre
from ..types import FloatArray, RealVector
from ..validation import as_finite_vector
from .coefficients import CoeffVector
from .laplace import laplace_many
from .power_series import eval_power_series

logger = logging.getLogger(__name__)

DEFAULT_LAMBDA_GRID = np.logspace(math.log10(0.05), math.log10(20.0), 40)
DEFAULT_LAMBDA_GRID.setflags(write=False)


@dataclass(frozen=True, eq=False)
class IntertwiningReport:
    """Rows (λ, (V𝒜g)(λ), (ℬUg)(λ), difference) and the worst deviation.

    `sigma_discrepancy` is the L²(Σ) norm of the difference on the fixed
    rule built from a measure, when one was supplied.
    """

    lambdas: FloatArray
    lhs: FloatArray
    rhs: FloatArray
    max_abs_deviation: float
    sigma_discrepancy: float | None = None

    @property
    def differences(self) -> FloatArray:
        return self.lhs - self.rhs

    def rows(self) -> list[tuple[float, float, float, float]]:
        return [
            (float(lam), float(left), float(right), float(left - right))
            for lam, left, right in zip(self.lambdas, self.lhs, self.rhs, strict=True)
        ]


def mobius_V(u: Expression) -> MobiusPullback:
    """(Vu)(λ) = (λ+1/2)^{−1} u((2λ−1)/(2λ+1))."""

    return MobiusPullback(u)


def laguerre_expand_U(g: CoeffVector | RealVector) -> LaguerreSeries:
    """(Ug)(t) = Σ g_n 𝖫_n(t) e^{−t/2}."""

    vector = CoeffVector.of(g)
    if len(vector) - 1 > MAX_LAGUERRE_DEGREE:
        raise ValidationError.degree_too_large(len(vector) - 1, MAX_LAGUERRE_DEGREE)
    return LaguerreSeries(vector.coefficients)


def verify_intertwining(
    g: CoeffVector | RealVector,
    m: Measure | None = None,
    lam_grid: RealVector | None = None,
    cfg: QuadratureConfig | None = None,
) -> IntertwiningReport:
    """Compare V𝒜g with ℬUg pointwise on a λ grid.

    With a measure strictly inside (−1, 1) and no explicit grid, the grid is
    the Möbius image of its atoms and of Gauss–Legendre nodes of its density
    pieces, weighted so that it is a fixed quadrature rule for dΣ.
    """

    vector = CoeffVector.of(g)
    cfg = cfg or QuadratureConfig()
    weights: FloatArray | None = None
    if lam_grid is not None:
        grid = as_finite_vector("lambda_grid", lam_grid)
    elif m is not None:
        grid, weights = _sigma_rule(m, cfg)
    else:
        grid = DEFAULT_LAMBDA_GRID
    if grid.size == 0 or np.any(grid <= 0):
        raise ValidationError.argument_out_of_range("lambda_grid", "grid", "a non-empty set of reals > 0")

    series = Function(lambda mu: eval_power_series(vector, mu), label=f"A[{len(vector)}]", degree=len(vector) - 1)
    lhs = mobius_V(series)(grid)
    rhs = laplace_many(laguerre_expand_U(vector), grid, cfg)
    diff = lhs - rhs
    discrepancy = float(math.sqrt(np.dot(weights, diff**2))) if weights is not None else None
    worst = float(np.max(np.abs(diff)))
    logger.debug("intertwining: K=%d, %d points, max deviation %.3e", len(vector), grid.size, worst)
    return IntertwiningReport(
        lambdas=grid, lhs=lhs, rhs=rhs, max_abs_deviation=worst, sigma_discrepancy=discrepancy
    )


def _sigma_rule(m: Measure, cfg: QuadratureConfig) -> tuple[FloatArray, FloatArray]:
    sigma = transport_to_sigma(m, cfg)
    points: list[FloatArray] = [np.array([atom.location for atom in sigma.atoms])]
    weights: list[FloatArray] = [np.array([atom.weight for atom in sigma.atoms])]
    nodes, gl_weights = gauss_legendre(cfg.base_order)
    for piece in m.pieces:
        half = 0.5 * (piece.b - piece.a)
        mu = piece.a + half * (nodes + 1.0)
        lam = np.asarray(mobius_lambda(mu), dtype=np.float64)
        points.append(lam)
        # dΣ = (λ+1/2)² dM
        weights.append(half * gl_weights * piece.density(mu) * (lam + 0.5) ** 2)
    grid = np.concatenate(points)
    rule = np.concatenate(weights)
    order = np.argsort(grid, kind="stable")
    return grid[order], rule[order]


__all__ = [
    "DEFAULT_LAMBDA_GRID",
    "IntertwiningReport",
    "laguerre_expand_U",
    "mobius_V",
    "verify_intertwining",
]
