"""Toolkit entrypoint binding operations to one set of settings."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import Any

import numpy as np

from .config import Settings
from .measure import Measure, log_moments, moments, tail_mass, total_mass, transport_to_sigma
from .moments import (
    ClassificationReport,
    DeterminacyEvidence,
    MomentSequence,
    TailEvidence,
    classify,
    determinacy_check,
    widom_tail_check,
)
from .operators import CoeffVector, IntertwiningReport, form_direct, form_integral, verify_intertwining
from .registry import build_family, ensure_defaults, get_suite, list_families, list_suites
from .spectral import DEFAULT_TOP_K, SpectralProfile, norm_profile
from .types import FloatArray, RealVector, Side
from .verification import SuiteResult, run_stieltjes_demo


class Toolkit:
    """Composes settings with the measure, moment and operator layers."""

    def __init__(self, settings: Settings | None = None) -> None:
        self._settings = settings or Settings()

    @classmethod
    def from_config(cls, path: str | Path | None = None, **overrides: Any) -> Toolkit:
        """Create a toolkit from a JSON config file, the environment and overrides."""

        return cls(Settings.load(path, **overrides))

    @property
    def settings(self) -> Settings:
        """Return the bound settings."""

        return self._settings

    def family(self, name: str, **params: Any) -> Measure:
        """Build a registered measure family."""

        ensure_defaults()
        return build_family(name, **params)

    def families(self) -> list[str]:
        """List registered family names."""

        return list(list_families())

    def suites(self) -> list[str]:
        """List registered verification suites."""

        return list(list_suites())

    def total_mass(self, m: Measure) -> float:
        """Return M(ℝ) for a measure."""

        return total_mass(m, self._settings.quadrature)

    def moments(self, m: Measure, count: int) -> MomentSequence:
        """Return the first `count` moments of a measure."""

        return moments(m, count, self._settings.quadrature)

    def log_moments(self, m: Measure, count: int) -> tuple[FloatArray, FloatArray]:
        """Return (sign, log|q_n|) for the first `count` moments."""

        return log_moments(m, count, self._settings.quadrature)

    def tail_mass(self, m: Measure, side: Side, eps: float) -> float:
        """Return the mass within `eps` of the endpoint on `side`."""

        return tail_mass(m, side, eps, self._settings.quadrature)

    def transport(self, m: Measure) -> Measure:
        """Push a measure on (−1, 1) to the half-line."""

        return transport_to_sigma(m, self._settings.quadrature)

    def classify(self, q: MomentSequence | RealVector, orders: list[int] | None = None) -> ClassificationReport:
        """Classify a moment sequence as closable, bounded or compact."""

        return classify(q, orders, analysis=self._settings.analysis)

    def determinacy(self, q: MomentSequence | RealVector) -> DeterminacyEvidence:
        """Return growth evidence for uniqueness of the moment problem."""

        return determinacy_check(q)

    def tails(self, m: Measure, eps_grid: RealVector | None = None) -> TailEvidence:
        """Return tail-mass evidence near ±1."""

        return widom_tail_check(m, eps_grid, self._settings.quadrature)

    def spectrum(
        self,
        q: MomentSequence | RealVector,
        orders: Sequence[int] | None = None,
        k: int = DEFAULT_TOP_K,
    ) -> SpectralProfile:
        """Return the spectral profile of the Hankel sections of `q`."""

        return norm_profile(q, tuple(orders) if orders else None, k)

    def form(self, m: Measure, g: CoeffVector | RealVector) -> tuple[float, float]:
        """Return (form_direct, form_integral) for `g` against `m`."""

        vector = CoeffVector.of(g)
        q = self.moments(m, 2 * len(vector) - 1)
        return form_direct(q, vector), form_integral(m, vector, self._settings.quadrature)

    def intertwining(
        self,
        g: CoeffVector | RealVector,
        m: Measure | None = None,
        lam_grid: RealVector | None = None,
    ) -> IntertwiningReport:
        """Compare V𝒜g with ℬUg on a λ grid."""

        return verify_intertwining(g, m, lam_grid, self._settings.quadrature)

    def verify(self, suite: str, **params: Any) -> SuiteResult:
        """Run a registered verification suite with these settings."""

        return get_suite(suite)(self._settings, **params)

    def stieltjes_demo(self, thetas: Sequence[float], count: int) -> SuiteResult:
        """Tabulate Stieltjes moments for several θ."""

        return run_stieltjes_demo(self._settings, thetas=thetas, count=count)

    def rng(self) -> np.random.Generator:
        """Return a generator seeded from the settings."""

        return np.random.default_rng(self._settings.seed)


__all__ = ["Toolkit"]
