"""Finite Hankel sections and positivity checks."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, eigvalsh, hankel

from ..config import MAX_SECTION_ORDER
from ..exceptions import NumericalError, ValidationError
from ..types import FloatArray, RealVector, Shift
from ..validation import as_finite_matrix, validate_positive_int
from .sequence import MomentSequence, as_moment_sequence

logger = logging.getLogger(__name__)

DEFAULT_PSD_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class HankelSection:
    """The N×N matrix with entries q_{n+m+shift}."""

    order: int
    entries: FloatArray
    shift: Shift = 0

    def __post_init__(self) -> None:
        entries = as_finite_matrix("section", self.entries)
        if entries.shape[0] != self.order:
            raise ValidationError.shape_mismatch(f"section of order {self.order} has shape {entries.shape}")
        if self.shift not in (0, 1):
            raise ValidationError.argument_out_of_range("shift", self.shift, "0 or 1")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_matrix(cls, matrix: object, shift: Shift = 0) -> HankelSection:
        entries = as_finite_matrix("section", matrix)
        return cls(order=entries.shape[0], entries=entries, shift=shift)


def required_moments(order: int, shift: Shift = 0) -> int:
    return 2 * order - 1 + shift


def hankel_section(q: MomentSequence | RealVector, order: int, shift: Shift = 0) -> HankelSection:
    """Build the section entry(n, m) = q_{n+m+shift}, 0 ≤ n, m < order."""

    order = validate_positive_int("order", order)
    if order > MAX_SECTION_ORDER:
        raise ValidationError.argument_out_of_range("order", order, f"at most {MAX_SECTION_ORDER}")
    if shift not in (0, 1):
        raise ValidationError.argument_out_of_range("shift", shift, "0 or 1")
    values = as_moment_sequence(q).require(required_moments(order, shift))[shift:]
    entries = hankel(values[:order], values[order - 1 :])
    return HankelSection(order=order, entries=entries, shift=shift)


def eigenvalues(section: HankelSection | FloatArray) -> FloatArray:
    """Ascending eigenvalues of a symmetric section."""

    matrix = section.entries if isinstance(section, HankelSection) else as_finite_matrix("section", section)
    try:
        return np.asarray(eigvalsh(matrix, check_finite=True), dtype=np.float64)
    except (LinAlgError, ValueError) as exc:
        raise NumericalError.eigensolver_failed() from exc


def is_psd(section: HankelSection | FloatArray, tol: float = DEFAULT_PSD_TOLERANCE) -> tuple[bool, float]:
    """Return (λ_min ≥ −tol·max(1, ‖H‖₂), λ_min)."""

    if not np.isfinite(tol) or tol < 0:
        raise ValidationError.argument_out_of_range("tol", tol, "a non-negative real")
    eigs = eigenvalues(section)
    lam_min = float(eigs[0])
    norm = float(max(abs(eigs[0]), abs(eigs[-1])))
    passed = lam_min >= -tol * max(1.0, norm)
    logger.debug("psd check: order=%d min=%.6e norm=%.6e passed=%s", eigs.size, lam_min, norm, passed)
    return passed, lam_min


def stieltjes_check(q: MomentSequence | RealVector, order: int, tol: float = DEFAULT_PSD_TOLERANCE) -> bool:
    """PSD of both the plain and the index-shifted section of the given order."""

    seq = as_moment_sequence(q)
    seq.require(2 * validate_positive_int("order", order))
    return is_psd(hankel_section(seq, order, 0), tol)[0] and is_psd(hankel_section(seq, order, 1), tol)[0]


__all__ = [
    "DEFAULT_PSD_TOLERANCE",
    "HankelSection",
    "eigenvalues",
    "hankel_section",
    "is_psd",
    "required_moments",
    "stieltjes_check",
]
