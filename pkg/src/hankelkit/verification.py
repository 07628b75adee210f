"""Invariant suites comparing independent evaluation paths.

Every runner returns a `SuiteResult` holding one row per case; a suite
passes when its worst deviation stays within the suite tolerance.
Randomized suites draw from `numpy.random.default_rng(seed)`.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from .config import Settings
from .exceptions import ValidationError, VerificationError
from .expressions import Constant, Expression, LaguerreSeries, Polynomial
from .measure import (
    Measure,
    integrate_against,
    lebesgue,
    lebesgue01,
    log_moment,
    moments,
    sigma_to_mu_mass,
    stieltjes,
    stieltjes_log_moment_exact,
    total_mass,
    transport_to_sigma,
)
from .operators import (
    CoeffVector,
    adjoint_moments,
    form_direct,
    form_integral,
    laplace_many,
    mobius_V,
    power_series_expression,
    verify_intertwining,
)
from .quadrature import exponential_cutoff, integrate
from .special_functions import laguerre_laplace_closed, laguerre_table
from .types import FloatArray
from .validation import validate_positive_int

logger = logging.getLogger(__name__)

FORM_TOLERANCE = 1e-9
INTERTWINE_TOLERANCE = 1e-8
LAGUERRE_TOLERANCE = 1e-9
TRANSPORT_TOLERANCE = 1e-10
CLOSURE_TOLERANCE = 1e-9
UNITARITY_TOLERANCE = 1e-9
STIELTJES_TOLERANCE = 1e-6

LAGUERRE_LAMBDAS = (0.1, 0.5, 1.0, 2.0, 10.0)
STIELTJES_THETAS = (-1.0, -0.5, 0.0, 0.5, 1.0)
STIELTJES_CHECKED_ORDER = 10
STIELTJES_LINEAR_LIMIT = 40


@dataclass(frozen=True)
class SuiteResult:
    name: str
    tolerance: float
    max_deviation: float
    rows: tuple[dict[str, Any], ...]
    worst_case: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance

    def check(self) -> SuiteResult:
        """Raise `VerificationError` when the tolerance is breached."""

        if not self.passed:
            raise VerificationError.tolerance_breached(self.name, self.max_deviation, self.tolerance, self.worst_case)
        return self


def run_form(
    settings: Settings | None = None,
    *,
    measure: Measure | None = None,
    K: int = 16,
    trials: int = 100,
    seed: int | None = None,
) -> SuiteResult:
    """form_direct against form_integral for random g with 1 ≤ len(g) ≤ K.

    Each trial also checks the pairing ∫(𝒜g)(μ)·μ dM = Σ g_n u_n.
    """

    settings = settings or Settings()
    cfg = settings.quadrature
    measure = measure or lebesgue01()
    K = validate_positive_int("K", K)
    trials = validate_positive_int("trials", trials)
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    q = moments(measure, 2 * K - 1, cfg)
    u = Polynomial([0.0, 1.0])
    u_n = adjoint_moments(measure, u, K, cfg).values

    rows: list[dict[str, Any]] = []
    for trial in range(trials):
        size = int(rng.integers(1, K + 1))
        g = CoeffVector.random(rng, size)
        direct = form_direct(q, g)
        integral = form_integral(measure, g, cfg)
        series = power_series_expression(g)
        pairing = float(integrate_against(measure, lambda x, p=series: p(x) * x, cfg))
        dual = float(g.coefficients @ u_n[:size])
        rows.append(
            {
                "trial": trial,
                "K": size,
                "direct": direct,
                "integral": integral,
                "deviation": abs(direct - integral) / (1.0 + abs(direct)),
                "pairing_deviation": abs(pairing - dual) / (1.0 + abs(dual)),
            }
        )
    return _result("form", FORM_TOLERANCE, rows, ("deviation", "pairing_deviation"))


def run_intertwine(
    settings: Settings | None = None,
    *,
    K: int = 8,
    trials: int = 10,
    seed: int | None = None,
    measure: Measure | None = None,
    lam_grid: Sequence[float] | None = None,
    coefficients: CoeffVector | None = None,
) -> SuiteResult:
    """V𝒜g against ℬUg for random g of length K.

    A fixed `coefficients` vector replaces the random draws with a single trial.
    """

    settings = settings or Settings()
    K = validate_positive_int("K", K)
    trials = validate_positive_int("trials", trials)
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    draws = [coefficients] if coefficients is not None else [CoeffVector.random(rng, K) for _ in range(trials)]
    rows: list[dict[str, Any]] = []
    for trial, g in enumerate(draws):
        report = verify_intertwining(g, measure, lam_grid, settings.quadrature)
        worst = int(np.argmax(np.abs(report.differences)))
        rows.append(
            {
                "trial": trial,
                "K": len(g),
                "lambda": float(report.lambdas[worst]),
                "lhs": float(report.lhs[worst]),
                "rhs": float(report.rhs[worst]),
                "deviation": report.max_abs_deviation,
                "sigma_discrepancy": report.sigma_discrepancy,
            }
        )
    return _result("intertwine", INTERTWINE_TOLERANCE, rows, ("deviation",))


def run_laguerre(
    settings: Settings | None = None,
    *,
    max_n: int = 20,
    lambdas: Sequence[float] = LAGUERRE_LAMBDAS,
) -> SuiteResult:
    """Numeric Laplace transforms of 𝖫_n e^{−t/2} against the closed form,
    plus orthonormality of the Laguerre functions up to `max_n`."""

    settings = settings or Settings()
    cfg = settings.quadrature
    max_n = validate_positive_int("max_n", max_n)
    grid = np.asarray(lambdas, dtype=np.float64)
    rows: list[dict[str, Any]] = []
    for n in range(max_n + 1):
        basis = np.zeros(n + 1)
        basis[n] = 1.0
        numeric = laplace_many(LaguerreSeries(basis), grid, cfg)
        for lam, value in zip(grid, numeric, strict=True):
            closed = laguerre_laplace_closed(n, float(lam))
            rows.append(
                {
                    "check": "laplace",
                    "n": n,
                    "lambda": float(lam),
                    "numeric": float(value),
                    "closed": closed,
                    "deviation": abs(float(value) - closed),
                }
            )

    gram = _laguerre_gram(max_n, settings)
    for i in range(max_n + 1):
        for j in range(i, max_n + 1):
            expected = 1.0 if i == j else 0.0
            rows.append(
                {
                    "check": "orthonormality",
                    "i": i,
                    "j": j,
                    "numeric": float(gram[i, j]),
                    "closed": expected,
                    "deviation": abs(float(gram[i, j]) - expected),
                }
            )
    return _result("laguerre", LAGUERRE_TOLERANCE, rows, ("deviation",))


def run_transport(
    settings: Settings | None = None,
    *,
    measure: Measure | None = None,
) -> SuiteResult:
    """Total mass of M against ∫(λ+1/2)^{−2} dΣ after transport."""

    settings = settings or Settings()
    cfg = settings.quadrature
    measures = [measure] if measure is not None else _transport_measures()
    rows: list[dict[str, Any]] = []
    for index, m in enumerate(measures):
        sigma = transport_to_sigma(m, cfg)
        direct = total_mass(m, cfg)
        transported = sigma_to_mu_mass(sigma, cfg)
        rows.append(
            {
                "case": index,
                "family": m.family,
                "mass": direct,
                "transported_mass": transported,
                "deviation": abs(direct - transported) / max(abs(direct), 1e-300),
            }
        )
    return _result("transport", TRANSPORT_TOLERANCE, rows, ("deviation",))


def run_closure(
    settings: Settings | None = None,
    *,
    measure: Measure | None = None,
    ratio: float = 0.9,
    lengths: Sequence[int] = (8, 16, 32, 64),
) -> SuiteResult:
    """Long geometric g_n = rⁿ beyond finitely supported sequences.

    For each length K the form is evaluated from the moments and by
    quadrature; the longest K is also compared with the limit
    ∫(1 − rμ)^{−2} dM.
    """

    settings = settings or Settings()
    cfg = settings.quadrature
    measure = measure or lebesgue(-0.5, 0.5)
    if measure.radius >= 1.0:
        raise ValidationError.support_touches_endpoint(f"closure suite needs radius < 1, got {measure.radius}")
    if not 0.0 < ratio < 1.0:
        raise ValidationError.argument_out_of_range("ratio", ratio, "a real in (0, 1)")
    lengths = sorted(validate_positive_int("K", k) for k in lengths)
    q = moments(measure, 2 * lengths[-1] - 1, cfg)
    limit = float(integrate_against(measure, lambda x: (1.0 - ratio * x) ** -2, cfg))

    rows: list[dict[str, Any]] = []
    for K in lengths:
        g = CoeffVector.geometric(ratio, K)
        direct = form_direct(q, g)
        integral = form_integral(measure, g, cfg)
        rows.append(
            {
                "K": K,
                "direct": direct,
                "integral": integral,
                "limit": limit,
                "limit_gap": abs(integral - limit) / max(abs(limit), 1e-300),
                "deviation": abs(direct - integral) / (1.0 + abs(direct)),
            }
        )
    rows[-1]["deviation"] = max(rows[-1]["deviation"], rows[-1]["limit_gap"])
    return _result("closure", CLOSURE_TOLERANCE, rows, ("deviation",))


def run_unitarity(
    settings: Settings | None = None,
    *,
    measure: Measure | None = None,
    functions: Sequence[Expression] | None = None,
) -> SuiteResult:
    """‖Vu‖²_{L²(Σ)} against ‖u‖²_{L²(M)} under transport."""

    settings = settings or Settings()
    cfg = settings.quadrature
    measure = measure or lebesgue(-0.5, 0.5)
    functions = functions or (Constant(1.0), Polynomial([0.0, 1.0]), Polynomial([1.0, -2.0, 0.5]))
    sigma = transport_to_sigma(measure, cfg)
    rows: list[dict[str, Any]] = []
    for u in functions:
        vu = mobius_V(u)
        on_sigma = float(integrate_against(sigma, lambda lam, f=vu: f(lam) ** 2, cfg))
        on_m = float(integrate_against(measure, lambda x, f=u: f(x) ** 2, cfg))
        rows.append(
            {
                "u": getattr(u, "describe", lambda: type(u).__name__)(),
                "norm_sigma": on_sigma,
                "norm_m": on_m,
                "deviation": abs(on_sigma - on_m) / max(abs(on_m), 1e-300),
            }
        )
    return _result("unitarity", UNITARITY_TOLERANCE, rows, ("deviation",))


def run_stieltjes_demo(
    settings: Settings | None = None,
    *,
    thetas: Sequence[float] = STIELTJES_THETAS,
    count: int = STIELTJES_CHECKED_ORDER + 1,
) -> SuiteResult:
    """Moments of the Stieltjes family for several θ.

    Columns must agree with each other and with √π e^{(n+1)²/4} for
    n ≤ 10; larger n are tabulated in log space only.
    """

    settings = settings or Settings()
    cfg = settings.quadrature
    count = validate_positive_int("count", count)
    members = [(float(theta), stieltjes(theta)) for theta in thetas]
    if not members:
        raise ValidationError.argument_out_of_range("thetas", list(thetas), "at least one theta")
    rows: list[dict[str, Any]] = []
    for n in range(count):
        exact = stieltjes_log_moment_exact(n)
        logs = {theta: log_moment(m, n, cfg)[1] for theta, m in members}
        row: dict[str, Any] = {"n": n, "log_exact": exact, "log_values": {f"{t!r}": v for t, v in logs.items()}}
        if n <= STIELTJES_LINEAR_LIMIT:
            row["values"] = {f"{t!r}": math.exp(v) for t, v in logs.items()}
        if n <= STIELTJES_CHECKED_ORDER:
            spread = max(logs.values()) - min(logs.values())
            gap = max(abs(v - exact) for v in logs.values())
            row["deviation"] = max(math.expm1(spread), math.expm1(gap))
        else:
            row["deviation"] = 0.0
        rows.append(row)
    return _result("stieltjes", STIELTJES_TOLERANCE, rows, ("deviation",))


def _laguerre_gram(max_n: int, settings: Settings) -> FloatArray:
    # each factor 𝖫_n e^{−t/2} drops below 1e−9 beyond the cut-off
    cutoff = exponential_cutoff(0.5, max_n, floor=1e-9)

    def integrand(t: FloatArray) -> FloatArray:
        table = laguerre_table(max_n, t)
        return table[:, None, :] * table[None, :, :] * np.exp(-t)

    edges = np.linspace(0.0, cutoff, max(2, math.ceil(cutoff / 4.0)) + 1)
    return np.asarray(integrate(integrand, 0.0, cutoff, settings.quadrature, breakpoints=edges))


def _transport_measures() -> list[Measure]:
    inner = Measure.from_parts(atoms=[(0.0, 1.0), (-0.9, 0.25), (0.75, 0.5)])
    return [lebesgue(-0.5, 0.5), inner, lebesgue(-0.99, 0.99)]


def _result(name: str, tolerance: float, rows: list[dict[str, Any]], keys: tuple[str, ...]) -> SuiteResult:
    worst_row: dict[str, Any] | None = None
    worst = 0.0
    for row in rows:
        for key in keys:
            value = row.get(key)
            if value is None:
                continue
            if not math.isfinite(value) or value > worst:
                worst = value if math.isfinite(value) else math.inf
                worst_row = row
    logger.info("suite %s: %d cases, max deviation %.3e (tolerance %.1e)", name, len(rows), worst, tolerance)
    return SuiteResult(name=name, tolerance=tolerance, max_deviation=worst, rows=tuple(rows), worst_case=worst_row)


__all__ = [
    "CLOSURE_TOLERANCE",
    "FORM_TOLERANCE",
    "INTERTWINE_TOLERANCE",
    "LAGUERRE_TOLERANCE",
    "STIELTJES_TOLERANCE",
    "TRANSPORT_TOLERANCE",
    "UNITARITY_TOLERANCE",
    "SuiteResult",
    "run_closure",
    "run_form",
    "run_intertwine",
    "run_laguerre",
    "run_stieltjes_demo",
    "run_transport",
    "run_unitarity",
]
