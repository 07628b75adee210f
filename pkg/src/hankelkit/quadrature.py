"""Adaptive composite Gauss–Legendre quadrature.

Integrands are vectorized: they receive a 1-D array of abscissas and return an
array whose last axis matches it, so a batch of related integrals (all moments
of a measure, say) shares one panel decomposition. Panels are bisected until
two successive refinements agree to `relative_tolerance` times the running
estimate of ∫|f|, and accepted contributions are summed in panel order so
results are reproducible.
"""

from __future__ import annotations

import logging
import math
from typing import Literal

import numpy as np
from scipy.optimize import brentq
from scipy.special import gammaln, logsumexp

from .config import QuadratureConfig
from .exceptions import QuadratureError
from .special_functions import gauss_legendre
from .types import FloatArray, Integrand
from .validation import validate_interval

logger = logging.getLogger(__name__)

Singularity = Literal["none", "left", "right"]

ENVELOPE_FLOOR = 1e-18
_SMALLEST_GRADED_PANEL = 3e-8
_LOG_SCAN_START = 16.0
_LOG_SCAN_LIMIT = 700.0
_HALFLINE_MAX_PANELS = 64
_HALFLINE_GROWTH_STRIKES = 6


def integrate(
    f: Integrand,
    a: float,
    b: float,
    cfg: QuadratureConfig,
    *,
    singular: Singularity = "none",
    breakpoints: FloatArray | None = None,
) -> FloatArray:
    """Integrate `f` over the finite interval [a, b].

    `breakpoints` strictly inside (a, b) seed the initial panels of a regular
    integral.

    Endpoints flagged singular are handled by the substitution
    x = a + (b−a)s² (or x = b − (b−a)s²) followed by geometric grading of the
    panels toward s = 0. Near a nonzero endpoint `f` only sees x to the
    precision with which a + (b−a)s² or b − (b−a)s² is representable, so
    power singularities there should be integrated in the distance variable.
    """

    validate_interval(a, b)
    if singular == "none":
        edges = _initial_edges(a, b, breakpoints)
        return _adaptive(f, edges[:-1], edges[1:], cfg)

    width = b - a
    # abscissas that round onto the singular endpoint are moved just inside
    inner_a = math.nextafter(a, b)
    inner_b = math.nextafter(b, a)
    if singular == "left":

        def g(s: FloatArray) -> FloatArray:
            return f(np.maximum(a + width * s * s, inner_a)) * (2.0 * width * s)

    else:

        def g(s: FloatArray) -> FloatArray:
            return f(np.minimum(b - width * s * s, inner_b)) * (2.0 * width * s)

    edges = _graded_edges(cfg.endpoint_refinement)
    return _adaptive(g, edges[:-1], edges[1:], cfg)


def integrate_halfline(f: Integrand, a: float, cfg: QuadratureConfig) -> FloatArray:
    """Integrate `f` over [a, ∞) on dyadically growing panels.

    Stops once two consecutive panels contribute less than the tolerance;
    panel contributions that keep growing are reported as divergence.
    """

    total: FloatArray | None = None
    total_abs = 0.0
    quiet = 0
    strikes = 0
    previous_abs = math.inf
    lo, width = a, 1.0
    for _ in range(_HALFLINE_MAX_PANELS):
        hi = lo + width
        part = integrate(f, lo, hi, cfg)
        part_abs = float(np.max(np.abs(part)))
        total = part if total is None else total + part
        total_abs += part_abs
        if part_abs <= cfg.relative_tolerance * total_abs:
            quiet += 1
            if quiet >= 2:
                return total
        else:
            quiet = 0
        strikes = strikes + 1 if part_abs >= previous_abs else 0
        if strikes >= _HALFLINE_GROWTH_STRIKES or not math.isfinite(total_abs):
            raise QuadratureError.divergent(f"panel contributions on [{a}, ∞) are not decaying")
        previous_abs = part_abs
        lo, width = hi, 2.0 * width
    raise QuadratureError.divergent(f"integral on [{a}, ∞) did not settle within {_HALFLINE_MAX_PANELS} panels")


def integrate_log_scale(f: Integrand, cfg: QuadratureConfig) -> FloatArray:
    """Integrate `f` over (0, ∞) in the variable t = ln x.

    The t-range is truncated where the transformed integrand falls below
    1e−18 of its peak.
    """

    def g(t: FloatArray) -> FloatArray:
        return f(np.exp(t)) * np.exp(t)

    lo, hi = _log_window(g)
    logger.debug("log-scale window [%.3f, %.3f]", lo, hi)
    return _adaptive(g, np.array([lo]), np.array([hi]), cfg)


def exponential_cutoff(rate: float, degree: int, *, scale: float = 1.0, floor: float = ENVELOPE_FLOOR) -> float:
    """Return T beyond which scale·e^{−rate·t}·Σ_m C(d,m) t^m/m! < floor·scale.

    The sum bounds |𝖫_d(t)|, so the cut-off is safe for Laguerre-weighted
    integrands of degree ≤ d decaying like e^{−rate·t}.
    """

    if rate <= 0:
        raise QuadratureError.divergent(f"envelope rate {rate} is not positive")
    target = math.log(floor)

    def excess(t: float) -> float:
        return _log_laguerre_bound(degree, t) - rate * t - target

    start = max(degree / rate, 1.0)
    if excess(start) <= 0:
        return start
    stop = 2.0 * start
    while excess(stop) > 0:
        stop *= 2.0
    return float(brentq(excess, start, stop, xtol=1e-6))


def _log_laguerre_bound(degree: int, t: float) -> float:
    m = np.arange(degree + 1)
    log_binom = gammaln(degree + 1) - gammaln(m + 1) - gammaln(degree - m + 1)
    log_terms = log_binom + m * math.log(max(t, 1e-300)) - gammaln(m + 1)
    return float(logsumexp(log_terms))


def _initial_edges(a: float, b: float, breakpoints: FloatArray | None) -> FloatArray:
    if breakpoints is None:
        return np.array([a, b])
    inner = np.asarray(breakpoints, dtype=np.float64)
    inner = np.unique(inner[(inner > a) & (inner < b)])
    return np.concatenate(([a], inner, [b]))


def _graded_edges(ratio: float) -> FloatArray:
    levels = max(1, math.ceil(math.log(_SMALLEST_GRADED_PANEL) / math.log(ratio)))
    return np.concatenate(([0.0], ratio ** np.arange(levels, -1, -1, dtype=np.float64)))


def _log_window(g: Integrand) -> tuple[float, float]:
    half = _LOG_SCAN_START
    while True:
        grid = np.linspace(-half, half, int(16 * half) + 1)
        with np.errstate(all="ignore"):
            values = np.abs(np.asarray(g(grid), dtype=np.float64))
        values = values.reshape(-1, grid.size).max(axis=0)
        if np.any(np.isposinf(values)):
            raise QuadratureError.divergent("log-scale integrand overflows")
        values = np.nan_to_num(values, nan=0.0)
        peak = float(values.max())
        if peak == 0.0:
            return -1.0, 1.0
        significant = np.flatnonzero(values >= ENVELOPE_FLOOR * peak)
        first, last = int(significant[0]), int(significant[-1])
        if (first > 0 and last < grid.size - 1) or half >= _LOG_SCAN_LIMIT:
            step = grid[1] - grid[0]
            return float(grid[first] - step), float(grid[last] + step)
        half = min(2.0 * half, _LOG_SCAN_LIMIT)


def _panel_estimates(
    g: Integrand, lo: FloatArray, hi: FloatArray, nodes: FloatArray, weights: FloatArray
) -> tuple[FloatArray, FloatArray]:
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    points = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    values = np.asarray(g(points), dtype=np.float64)
    if not np.all(np.isfinite(values)):
        bad = points[np.unravel_index(np.flatnonzero(~np.isfinite(values))[0], values.shape)[-1]]
        raise QuadratureError.divergent(f"integrand is not finite at x={bad!r}")
    values = values.reshape(*values.shape[:-1], lo.size, nodes.size)
    scaled = half[:, None] * weights[None, :]
    return (values * scaled).sum(axis=-1), (np.abs(values) * scaled).sum(axis=-1)


def _adaptive(g: Integrand, lo: FloatArray, hi: FloatArray, cfg: QuadratureConfig) -> FloatArray:
    nodes, weights = gauss_legendre(cfg.base_order)
    rtol = cfg.relative_tolerance
    coarse, coarse_abs = _panel_estimates(g, lo, hi, nodes, weights)
    accepted_lo: list[FloatArray] = []
    accepted_val: list[FloatArray] = []
    accepted_abs: FloatArray = np.zeros(coarse.shape[:-1])
    subdivisions = 0
    previous_total = float(np.sum(coarse))
    while lo.size:
        mid = 0.5 * (lo + hi)
        both_lo = np.concatenate((lo, mid))
        both_hi = np.concatenate((mid, hi))
        halves, halves_abs = _panel_estimates(g, both_lo, both_hi, nodes, weights)
        count = lo.size
        fine = halves[..., :count] + halves[..., count:]
        fine_abs = halves_abs[..., :count] + halves_abs[..., count:]
        subdivisions += count

        scale = accepted_abs + fine_abs.sum(axis=-1)
        error = np.abs(fine - coarse).reshape(-1, count)
        limit = (rtol * scale).reshape(-1, 1)
        unresolvable = (hi - lo) <= 4.0 * np.finfo(np.float64).eps * np.maximum(np.abs(mid), 1.0)
        done = np.all(error <= limit, axis=0) | unresolvable

        accepted_lo.append(lo[done])
        accepted_val.append(fine[..., done])
        accepted_abs = accepted_abs + fine_abs[..., done].sum(axis=-1)

        current_total = float(np.sum(accepted_abs)) + float(np.sum(np.abs(fine[..., ~done])))
        logger.debug("quadrature round: %d panels, %d accepted, |f| estimate %.17g", count, int(done.sum()), current_total)
        keep = ~done
        if subdivisions > cfg.max_subdivisions and np.any(keep):
            logger.warning("quadrature reached max_subdivisions=%d", cfg.max_subdivisions)
            raise QuadratureError.non_convergence(previous_total, current_total, subdivisions)
        previous_total = current_total
        lo = np.concatenate((lo[keep], mid[keep]))
        hi = np.concatenate((mid[keep], hi[keep]))
        coarse = np.concatenate((halves[..., :count][..., keep], halves[..., count:][..., keep]), axis=-1)

    order = np.argsort(np.concatenate(accepted_lo), kind="stable")
    values = np.concatenate(accepted_val, axis=-1)[..., order]
    return values.sum(axis=-1)


__all__ = [
    "ENVELOPE_FLOOR",
    "Singularity",
    "exponential_cutoff",
    "integrate",
    "integrate_halfline",
    "integrate_log_scale",
]
