"""Hankel sections, positivity and decay classification of moment sequences."""

from .classify import (
    ClassificationReport,
    DeterminacyEvidence,
    FitEvidence,
    PsdEvidence,
    classify,
    default_orders,
    determinacy_check,
)
from .hankel import DEFAULT_PSD_TOLERANCE, HankelSection, eigenvalues, hankel_section, is_psd, stieltjes_check
from .sequence import MomentSequence, as_moment_sequence
from .tails import DEFAULT_EPS_GRID, TailEvidence, widom_tail_check

__all__ = [
    "DEFAULT_EPS_GRID",
    "DEFAULT_PSD_TOLERANCE",
    "ClassificationReport",
    "DeterminacyEvidence",
    "FitEvidence",
    "HankelSection",
    "MomentSequence",
    "PsdEvidence",
    "TailEvidence",
    "as_moment_sequence",
    "classify",
    "default_orders",
    "determinacy_check",
    "eigenvalues",
    "hankel_section",
    "is_psd",
    "stieltjes_check",
    "widom_tail_check",
]
