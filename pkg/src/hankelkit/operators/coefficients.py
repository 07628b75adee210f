"""Finitely supported coefficient vectors and sampled functions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import PchipInterpolator

from ..exceptions import ValidationError
from ..types import DomainTag, FloatArray, RealVector
from ..validation import as_finite_vector

_DOMAINS: dict[str, tuple[float, float]] = {
    "mu_interval": (-1.0, 1.0),
    "lambda_halfline": (0.0, np.inf),
    "t_halfline": (0.0, np.inf),
}


@dataclass(frozen=True, eq=False)
class CoeffVector:
    """g = (g_0, …, g_{K−1}), an element of the finitely supported sequences."""

    coefficients: FloatArray

    def __post_init__(self) -> None:
        values = as_finite_vector("g", self.coefficients).copy()
        if values.size == 0:
            raise ValidationError.shape_mismatch("g must have at least one coefficient")
        values.setflags(write=False)
        object.__setattr__(self, "coefficients", values)

    def __len__(self) -> int:
        return int(self.coefficients.size)

    @property
    def norm_squared(self) -> float:
        return float(np.dot(self.coefficients, self.coefficients))

    @classmethod
    def of(cls, values: RealVector | CoeffVector) -> CoeffVector:
        return values if isinstance(values, CoeffVector) else cls(np.asarray(values, dtype=np.float64))

    @classmethod
    def random(cls, rng: np.random.Generator, size: int) -> CoeffVector:
        """Standard normal coefficients."""

        return cls(rng.standard_normal(size))

    @classmethod
    def geometric(cls, ratio: float, size: int) -> CoeffVector:
        """g_n = ratioⁿ for n < size."""

        return cls(ratio ** np.arange(size, dtype=np.float64))


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Samples of a function on strictly increasing nodes of a tagged domain.

    Evaluation between nodes is shape-preserving cubic interpolation; points
    outside [nodes[0], nodes[-1]] are rejected.
    """

    nodes: FloatArray
    values: FloatArray
    domain: DomainTag = "mu_interval"
    _interpolant: PchipInterpolator = field(init=False, repr=False)

    def __post_init__(self) -> None:
        nodes = as_finite_vector("nodes", self.nodes).copy()
        values = as_finite_vector("values", self.values).copy()
        if nodes.size != values.size:
            raise ValidationError.shape_mismatch(f"{nodes.size} nodes but {values.size} values")
        if nodes.size < 2:
            raise ValidationError.shape_mismatch("a grid function needs at least two nodes")
        if np.any(np.diff(nodes) <= 0):
            raise ValidationError.grid_not_increasing()
        if self.domain not in _DOMAINS:
            raise ValidationError.argument_out_of_range("domain", self.domain, f"one of {sorted(_DOMAINS)}")
        lo, hi = _DOMAINS[self.domain]
        if nodes[0] < lo or nodes[-1] > hi:
            raise ValidationError.grid_outside_domain(self.domain)
        nodes.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_interpolant", PchipInterpolator(nodes, values, extrapolate=False))

    @property
    def support_end(self) -> float:
        return float(self.nodes[-1])

    @property
    def support(self) -> tuple[float, float]:
        return float(self.nodes[0]), float(self.nodes[-1])

    def __call__(self, x: FloatArray | float) -> FloatArray:
        points = np.asarray(x, dtype=np.float64)
        outside = (points < self.nodes[0]) | (points > self.nodes[-1])
        if np.any(outside):
            raise ValidationError.outside_grid(float(points[outside].flat[0]))
        return np.asarray(self._interpolant(points), dtype=np.float64)

    @classmethod
    def sample(cls, func: object, nodes: RealVector, domain: DomainTag = "mu_interval") -> GridFunction:
        grid = np.asarray(nodes, dtype=np.float64)
        if not callable(func):
            raise ValidationError.argument_out_of_range("func", func, "a callable")
        return cls(grid, np.asarray(func(grid), dtype=np.float64), domain)


__all__ = ["CoeffVector", "GridFunction"]
