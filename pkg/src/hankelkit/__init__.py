"""HankelKit package."""

from .config import AnalysisConfig, QuadratureConfig, Settings
from .decay import Decay, DecayKind
from .exceptions import (
    ConfigurationError,
    HankelKitError,
    NumericalError,
    QuadratureError,
    ValidationError,
    VerificationError,
)
from .measure import Measure
from .moments import ClassificationReport, MomentSequence, classify
from .operators import CoeffVector
from .toolkit import Toolkit

__all__ = [
    "AnalysisConfig",
    "ClassificationReport",
    "CoeffVector",
    "ConfigurationError",
    "Decay",
    "DecayKind",
    "HankelKitError",
    "Measure",
    "MomentSequence",
    "NumericalError",
    "QuadratureConfig",
    "QuadratureError",
    "Settings",
    "Toolkit",
    "ValidationError",
    "VerificationError",
    "classify",
]
