"""Möbius transport of measures on (−1, 1) to measures on ℝ₊.

With μ = (2λ−1)/(2λ+1), the measures are linked by
dM(μ) = (λ+1/2)^{−2} dΣ(λ). Atoms keep their position under the map and pick up
the factor (λ+1/2)²; densities satisfy σ(λ) = η(μ(λ)) because the Jacobian
dμ/dλ = (λ+1/2)^{−2} cancels that factor.
"""

from __future__ import annotations

import logging
import math

from ..config import QuadratureConfig
from ..exceptions import NumericalError, ValidationError
from ..expressions import Composite, mobius_lambda, mobius_mu
from ..types import FloatArray
from .core import Atom, DensityPiece, Hint, Measure
from .integrate import integrate_against

logger = logging.getLogger(__name__)


def transport_to_sigma(m: Measure, cfg: QuadratureConfig | None = None) -> Measure:
    """Return dΣ on ℝ₊ corresponding to `m`, whose support must lie strictly inside (−1, 1)."""

    lo, hi = m.declared_support
    if not -1.0 < lo or not hi < 1.0:
        raise ValidationError.support_touches_endpoint(
            f"declared support [{lo}, {hi}] reaches ±1, where λ = (1+μ)/(2(1−μ)) is 0 or ∞"
        )
    atoms = tuple(_transport_atom(atom) for atom in m.atoms)
    pieces = tuple(_transport_piece(piece) for piece in m.pieces)
    sigma = Measure(atoms=atoms, pieces=pieces, support=(float(mobius_lambda(lo)), float(mobius_lambda(hi))))
    _check_sigma_condition(sigma, cfg)
    return sigma


def sigma_to_mu_mass(sigma: Measure, cfg: QuadratureConfig | None = None) -> float:
    """∫ (λ+1/2)^{−2} dΣ(λ), which equals the total mass of the original measure."""

    return float(integrate_against(sigma, lambda lam: (lam + 0.5) ** -2, cfg))


def _transport_atom(atom: Atom) -> Atom:
    lam = float(mobius_lambda(atom.location))
    return Atom(lam, atom.weight * (lam + 0.5) ** 2)


def _transport_piece(piece: DensityPiece) -> DensityPiece:
    a = float(mobius_lambda(piece.a))
    b = float(mobius_lambda(piece.b))
    density = Composite(piece.density, _mu_of_lambda, label="mu(lambda)")
    return DensityPiece(a, b, density, Hint(piece.hint))


def _mu_of_lambda(lam: FloatArray) -> FloatArray:
    return mobius_mu(lam)


def _check_sigma_condition(sigma: Measure, cfg: QuadratureConfig | None) -> None:
    # ∫ (λ+1)^{−2} dΣ < ∞ whenever the source measure is finite
    value = float(integrate_against(sigma, lambda lam: (lam + 1.0) ** -2, cfg))
    if not math.isfinite(value):
        raise NumericalError.sigma_condition_violated()
    logger.debug("transported measure: ∫(λ+1)^-2 dΣ = %.17g", value)


__all__ = ["sigma_to_mu_mass", "transport_to_sigma"]
