"""Measures, their moments and the Möbius transport to the half-line."""

from .core import Atom, DensityPiece, Hint, Measure, MomentRule
from .families import (
    StieltjesMomentRule,
    atom,
    compact,
    delta0,
    geometric,
    hilbert,
    inverse_square,
    lebesgue,
    lebesgue01,
    ones,
    slow,
    stieltjes,
    stieltjes_log_moment_exact,
)
from .integrate import (
    MOMENT_OVERFLOW,
    integrate_against,
    log_moment,
    log_moments,
    moment,
    moments,
    tail_mass,
    total_mass,
)
from .transport import sigma_to_mu_mass, transport_to_sigma

__all__ = [
    "MOMENT_OVERFLOW",
    "Atom",
    "DensityPiece",
    "Hint",
    "Measure",
    "MomentRule",
    "StieltjesMomentRule",
    "atom",
    "compact",
    "delta0",
    "geometric",
    "hilbert",
    "integrate_against",
    "inverse_square",
    "lebesgue",
    "lebesgue01",
    "log_moment",
    "log_moments",
    "moment",
    "moments",
    "ones",
    "sigma_to_mu_mass",
    "slow",
    "stieltjes",
    "stieltjes_log_moment_exact",
    "tail_mass",
    "total_mass",
    "transport_to_sigma",
]
