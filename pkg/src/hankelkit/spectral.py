"""Finite-section spectra as evidence for boundedness and compactness.

Finite sections cannot certify properties of the infinite form, so every
profile is labelled `mode="evidence"`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from scipy.linalg import LinAlgError, eigvalsh
from scipy.stats import linregress

from .exceptions import NumericalError, ValidationError
from .moments import DEFAULT_PSD_TOLERANCE, HankelSection, MomentSequence, as_moment_sequence, hankel_section
from .types import FloatArray, RealVector
from .validation import validate_positive_int

logger = logging.getLogger(__name__)

DEFAULT_ORDERS = (8, 16, 32, 64, 128, 256)
DEFAULT_TOP_K = 5
MONOTONE_SLACK = 1e-10


@dataclass(frozen=True, eq=False)
class SpectralProfile:
    orders: tuple[int, ...]
    norms: FloatArray
    top_eigenvalues: tuple[FloatArray, ...]
    growth_fit: float
    mode: Literal["evidence"] = "evidence"
    monotone: bool = field(default=True)

    def growth_over(self, last: int = 3) -> float:
        """Slope of log(norm) against log(N) over the last `last` orders."""

        return _slope(self.orders[-last:], self.norms[-last:])


def section_spectrum(section: HankelSection, k: int, tol: float = DEFAULT_PSD_TOLERANCE) -> FloatArray:
    """Largest `k` eigenvalues of a PSD section, in descending order."""

    k = validate_positive_int("k", k)
    if k > section.order:
        raise ValidationError.argument_out_of_range("k", k, f"at most the order {section.order}")
    eigs = _eigenvalues(section.entries)
    norm = float(max(abs(eigs[0]), abs(eigs[-1])))
    if eigs[0] < -tol * max(1.0, norm):
        raise ValidationError.not_positive_semidefinite(float(eigs[0]))
    return eigs[::-1][:k].copy()


def norm_profile(
    q: MomentSequence | RealVector,
    orders: list[int] | tuple[int, ...] | None = None,
    k: int = DEFAULT_TOP_K,
) -> SpectralProfile:
    """Spectral norms and leading eigenvalues of the sections of each order.

    Without explicit orders, the default orders the sequence can fill are used.
    """

    seq = as_moment_sequence(q)
    if orders:
        chosen = tuple(sorted(set(orders)))
    else:
        chosen = tuple(n for n in DEFAULT_ORDERS if 2 * n - 1 <= len(seq))
        if not chosen:
            raise ValidationError.insufficient_moments(2 * DEFAULT_ORDERS[0] - 1, len(seq))
    norms = np.empty(len(chosen))
    tops: list[FloatArray] = []
    for index, order in enumerate(chosen):
        eigs = _eigenvalues(hankel_section(seq, order, 0).entries)
        norms[index] = max(abs(eigs[0]), abs(eigs[-1]))
        tops.append(eigs[::-1][: min(k, order)].copy())
    monotone = bool(np.all(np.diff(norms) >= -MONOTONE_SLACK * np.maximum(1.0, norms[:-1])))
    if not monotone:
        logger.warning("section norms are not monotone in the order: %s", norms.tolist())
    norms.setflags(write=False)
    return SpectralProfile(
        orders=chosen,
        norms=norms,
        top_eigenvalues=tuple(tops),
        growth_fit=_slope(chosen, norms),
        monotone=monotone,
    )


def _eigenvalues(matrix: FloatArray) -> FloatArray:
    try:
        return np.asarray(eigvalsh(matrix), dtype=np.float64)
    except (LinAlgError, ValueError) as exc:
        raise NumericalError.eigensolver_failed() from exc


def _slope(orders: tuple[int, ...], norms: FloatArray) -> float:
    if len(orders) < 2 or np.any(np.asarray(norms) <= 0):
        return 0.0
    fit = linregress(np.log(np.asarray(orders, dtype=np.float64)), np.log(np.asarray(norms)))
    return float(fit.slope)


__all__ = ["DEFAULT_ORDERS", "DEFAULT_TOP_K", "SpectralProfile", "norm_profile", "section_spectrum"]
