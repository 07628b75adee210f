"""Named measure families with known moment asymptotics."""

from __future__ import annotations

import math

import numpy as np

from ..config import QuadratureConfig
from ..decay import Decay, DecayKind
from ..exceptions import ValidationError
from ..expressions import Constant, Function, Polynomial
from ..quadrature import ENVELOPE_FLOOR, integrate
from ..types import FloatArray
from ..validation import is_finite_real, validate_interval
from .core import Atom, DensityPiece, Hint, Measure

_GAUSSIAN_HALF_WIDTH = math.sqrt(-math.log(ENVELOPE_FLOOR))


class StieltjesMomentRule:
    """Log-space moments of dM_θ(μ) = 𝟙_{ℝ₊}(μ) μ^{−ln μ}(1 + θ sin(2π ln μ)) dμ.

    With μ = eᵗ and t = s + (n+1)/2,
    q_n = e^{(n+1)²/4} ∫ e^{−s²}(1 + θ sin(2π(s + (n+1)/2))) ds,
    truncated where e^{−s²} falls below 1e−18.
    """

    def __init__(self, theta: float) -> None:
        self.theta = theta

    def log_moment(self, n: int, cfg: QuadratureConfig) -> tuple[float, float]:
        shift = 0.5 * (n + 1)
        theta = self.theta

        def weight(s: FloatArray) -> FloatArray:
            return np.exp(-s * s) * (1.0 + theta * np.sin(2.0 * math.pi * (s + shift)))

        value = float(integrate(weight, -_GAUSSIAN_HALF_WIDTH, _GAUSSIAN_HALF_WIDTH, cfg))
        return 1.0, shift * shift + math.log(value)


def stieltjes_log_moment_exact(n: int) -> float:
    """log(√π e^{(n+1)²/4})."""

    return 0.5 * math.log(math.pi) + 0.25 * (n + 1) ** 2


def lebesgue01() -> Measure:
    return _tagged(_uniform(0.0, 1.0), "lebesgue01", Decay(DecayKind.BIG_O_INVERSE))


def hilbert() -> Measure:
    return _tagged(_uniform(0.0, 1.0), "hilbert", Decay(DecayKind.BIG_O_INVERSE))


def lebesgue(a: float = 0.0, b: float = 1.0) -> Measure:
    for name, value in (("a", a), ("b", b)):
        if not is_finite_real(value):
            raise ValidationError.argument_out_of_range(name, value, "a finite real")
    validate_interval(float(a), float(b))
    measure = _uniform(float(a), float(b))
    radius = max(abs(a), abs(b))
    if radius < 1.0:
        decay = Decay.geometric(radius, little_o=True)
    elif radius == 1.0:
        decay = Decay(DecayKind.BIG_O_INVERSE)
    else:
        decay = Decay(DecayKind.UNBOUNDED)
    return _tagged(measure, "lebesgue", decay, a=a, b=b)


def compact() -> Measure:
    piece = DensityPiece(0.0, 1.0, Polynomial([1.0, -1.0]))
    return _tagged(Measure(pieces=(piece,)), "compact", Decay(DecayKind.LITTLE_O_INVERSE))


def slow() -> Measure:
    """Density (−ln μ)^{−1/2}/√π on [0, 1], whose moments are (n+1)^{−1/2}."""

    def density(x: FloatArray) -> FloatArray:
        return 1.0 / np.sqrt(-math.pi * np.log(x))

    def near_one(d: FloatArray) -> FloatArray:
        return 1.0 / np.sqrt(-math.pi * np.log1p(-d))

    expr = Function(density, label="(-log(x))**(-1/2)/sqrt(pi)")
    reflected = Function(near_one, label="(-log(1-d))**(-1/2)/sqrt(pi)")
    pieces = (
        DensityPiece(0.0, 0.5, expr),
        DensityPiece(0.5, 1.0, expr, Hint.SINGULAR_RIGHT, reflected),
    )
    return _tagged(Measure(pieces=pieces, support=(0.0, 1.0)), "slow", Decay(DecayKind.TENDS_TO_ZERO))


def inverse_square() -> Measure:
    """Density −ln μ on [0, 1], whose moments are (n+1)^{−2}."""

    def density(x: FloatArray) -> FloatArray:
        return -np.log(x)

    piece = DensityPiece(0.0, 1.0, Function(density, label="-log(x)"), Hint.SINGULAR_LEFT)
    return _tagged(Measure(pieces=(piece,)), "inverse_square", Decay(DecayKind.LITTLE_O_INVERSE))


def ones() -> Measure:
    return _tagged(Measure(atoms=(Atom(1.0, 1.0),)), "ones", Decay(DecayKind.BOUNDED_NOT_DECAYING))


def geometric(rate: float = 0.5) -> Measure:
    if not is_finite_real(rate) or not 0.0 <= rate < 1.0:
        raise ValidationError.argument_out_of_range("rate", rate, "a real in [0, 1)")
    return _tagged(Measure(atoms=(Atom(float(rate), 1.0),)), "geometric", Decay.geometric(rate), rate=rate)


def delta0() -> Measure:
    return _tagged(Measure(atoms=(Atom(0.0, 1.0),)), "delta0", Decay.geometric(0.0))


def atom(x: float = 1.0, w: float = 1.0) -> Measure:
    for name, value in (("x", x), ("w", w)):
        if not is_finite_real(value):
            raise ValidationError.argument_out_of_range(name, value, "a finite real")
    measure = Measure(atoms=(Atom(float(x), float(w)),))
    radius = abs(float(x))
    if radius < 1.0:
        decay = Decay.geometric(radius)
    elif radius == 1.0:
        decay = Decay(DecayKind.BOUNDED_NOT_DECAYING)
    else:
        decay = Decay(DecayKind.UNBOUNDED)
    return _tagged(measure, "atom", decay, x=x, w=w)


def stieltjes(theta: float = 0.0) -> Measure:
    if not is_finite_real(theta) or not -1.0 <= theta <= 1.0:
        raise ValidationError.argument_out_of_range("theta", theta, "a real in [-1, 1]")
    theta = float(theta)

    def density(x: FloatArray) -> FloatArray:
        log_x = np.log(x)
        return np.exp(-log_x * log_x) * (1.0 + theta * np.sin(2.0 * math.pi * log_x))

    expr = Function(density, label=f"x**(-log(x))*(1+{theta!r}*sin(2*pi*log(x)))")
    piece = DensityPiece(0.0, math.inf, expr, Hint.LOG_SCALE)
    measure = Measure(pieces=(piece,), support=(0.0, math.inf), moment_rule=StieltjesMomentRule(theta))
    return _tagged(measure, "stieltjes", Decay(DecayKind.UNBOUNDED), theta=theta)


def _uniform(a: float, b: float) -> Measure:
    return Measure(pieces=(DensityPiece(a, b, Constant(1.0)),))


def _tagged(measure: Measure, family: str, decay: Decay, **params: float) -> Measure:
    object.__setattr__(measure, "family", family)
    object.__setattr__(measure, "decay", decay)
    object.__setattr__(measure, "params", dict(params))
    return measure


__all__ = [
    "StieltjesMomentRule",
    "atom",
    "compact",
    "delta0",
    "geometric",
    "hilbert",
    "inverse_square",
    "lebesgue",
    "lebesgue01",
    "ones",
    "slow",
    "stieltjes",
    "stieltjes_log_moment_exact",
]
