"""Tail-mass evidence for boundedness and compactness."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..config import QuadratureConfig
from ..exceptions import ValidationError
from ..measure import Measure, tail_mass
from ..types import FloatArray, RealVector
from ..validation import as_finite_vector, validate_open_unit

DEFAULT_EPS_GRID = (0.1, 0.01, 0.001)


@dataclass(frozen=True, eq=False)
class TailEvidence:
    """Ratios M(tail)/ε on both sides over a decreasing ε grid.

    `bounded_evidence` is the largest ratio seen. `compact_evidence` is the
    ratio at the smallest ε divided by the ratio at the largest ε, taken on
    the side where it is largest. Atoms at ±1 never enter the open tails and
    are reported in `endpoint_masses` as (M({−1}), M({1})).
    """

    eps_grid: FloatArray
    left_ratios: FloatArray
    right_ratios: FloatArray
    bounded_evidence: float
    compact_evidence: float
    endpoint_masses: tuple[float, float]

    @property
    def has_endpoint_atoms(self) -> bool:
        return any(mass > 0 for mass in self.endpoint_masses)


def widom_tail_check(
    m: Measure,
    eps_grid: RealVector | None = None,
    cfg: QuadratureConfig | None = None,
) -> TailEvidence:
    grid = as_finite_vector("eps_grid", DEFAULT_EPS_GRID if eps_grid is None else eps_grid)
    if grid.size == 0:
        raise ValidationError.shape_mismatch("eps_grid must not be empty")
    for eps in grid:
        validate_open_unit("eps", float(eps))
    grid = np.sort(grid)[::-1].copy()
    left = np.array([tail_mass(m, "left", float(eps), cfg) / eps for eps in grid])
    right = np.array([tail_mass(m, "right", float(eps), cfg) / eps for eps in grid])
    return TailEvidence(
        eps_grid=grid,
        left_ratios=left,
        right_ratios=right,
        bounded_evidence=float(max(left.max(), right.max())),
        compact_evidence=max(_trend(left), _trend(right)),
        endpoint_masses=(m.atom_mass_at(-1.0), m.atom_mass_at(1.0)),
    )


def _trend(ratios: FloatArray) -> float:
    first = float(ratios[0])
    if first == 0.0:
        return 0.0
    return float(ratios[-1]) / first


__all__ = ["DEFAULT_EPS_GRID", "TailEvidence", "widom_tail_check"]
