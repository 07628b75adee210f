"""Non-negative measures built from atoms and piecewise densities."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import TYPE_CHECKING, Any, Protocol, runtime_checkable

import numpy as np

from ..decay import Decay
from ..exceptions import ValidationError
from ..expressions import Expression
from ..special_functions import gauss_legendre
from ..types import Interval
from ..validation import is_finite_real, validate_interval

if TYPE_CHECKING:
    from ..config import QuadratureConfig

_SPOT_CHECK_POINTS = 33


class Hint(str, Enum):
    """Integrability hint for a density piece."""

    REGULAR = "none"
    SINGULAR_LEFT = "left"
    SINGULAR_RIGHT = "right"
    LOG_SCALE = "log"  # piece on (0, ∞), integrated in t = ln x


@runtime_checkable
class MomentRule(Protocol):
    """Exact log-space moment evaluation supplied by a named family."""

    def log_moment(self, n: int, cfg: QuadratureConfig) -> tuple[float, float]:
        """Return (sign, log|q_n|)."""


@dataclass(frozen=True)
class Atom:
    location: float
    weight: float

    def __post_init__(self) -> None:
        if not is_finite_real(self.location):
            raise ValidationError.argument_out_of_range("location", self.location, "a finite real")
        if not is_finite_real(self.weight):
            raise ValidationError.argument_out_of_range("weight", self.weight, "a finite real")
        if self.weight < 0:
            raise ValidationError.negative_weight(self.location, self.weight)


@dataclass(frozen=True)
class DensityPiece:
    """A density on [a, b]; b may be infinite for regular and log-scale pieces.

    A right-singular piece may also give its density as a function of the
    distance d = b − x through `reflected`; integrals toward b then use it
    in place of `density`.
    """

    a: float
    b: float
    density: Expression
    hint: Hint = Hint.REGULAR
    reflected: Expression | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "hint", Hint(self.hint))
        validate_interval(self.a, self.b, allow_infinite=True)
        if not math.isfinite(self.a):
            raise ValidationError.invalid_interval(self.a, self.b)
        if self.hint is Hint.LOG_SCALE and (self.a != 0.0 or math.isfinite(self.b)):
            raise ValidationError.argument_out_of_range("hint", "log", "a piece on [0, inf)")
        if self.hint in (Hint.SINGULAR_LEFT, Hint.SINGULAR_RIGHT) and not math.isfinite(self.b):
            raise ValidationError.argument_out_of_range("hint", self.hint.value, "a finite piece")
        if self.reflected is not None and self.hint is not Hint.SINGULAR_RIGHT:
            raise ValidationError.argument_out_of_range("reflected", "density", "a right-singular piece")
        self._spot_check()

    @property
    def is_bounded(self) -> bool:
        return math.isfinite(self.b)

    def _spot_check(self) -> None:
        nodes, _ = gauss_legendre(_SPOT_CHECK_POINTS)
        if self.is_bounded:
            points = self.a + (self.b - self.a) * 0.5 * (nodes + 1.0)
        else:
            points = self.a + np.exp(4.0 * nodes)
        with np.errstate(all="ignore"):
            values = np.asarray(self.density(points), dtype=np.float64)
        bad = np.flatnonzero(~np.isfinite(values) | (values < 0))
        if bad.size:
            raise ValidationError.negative_density(self.a, self.b, float(points[bad[0]]))


@dataclass(frozen=True)
class Measure:
    """A non-negative measure: atoms plus density pieces on a declared support.

    Named families also carry a decay descriptor for their moment sequence and,
    where available, an exact log-space moment rule.
    """

    atoms: tuple[Atom, ...] = ()
    pieces: tuple[DensityPiece, ...] = ()
    support: Interval | None = None
    family: str | None = None
    params: dict[str, Any] = field(default_factory=dict)
    decay: Decay | None = None
    moment_rule: MomentRule | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if self.support is None:
            object.__setattr__(self, "support", self._hull())
        lo, hi = self.declared_support
        if not lo <= hi:
            raise ValidationError.invalid_interval(lo, hi)
        for atom in self.atoms:
            if not lo <= atom.location <= hi:
                raise ValidationError.atom_outside_support(atom.location)
        for piece in self.pieces:
            if piece.a < lo or piece.b > hi:
                raise ValidationError.piece_outside_support(piece.a, piece.b)

    @classmethod
    def from_parts(
        cls,
        atoms: Iterable[tuple[float, float]] = (),
        pieces: Iterable[DensityPiece] = (),
        *,
        support: Interval | None = None,
    ) -> Measure:
        return cls(atoms=tuple(Atom(float(x), float(w)) for x, w in atoms), pieces=tuple(pieces), support=support)

    @property
    def declared_support(self) -> Interval:
        return self.support if self.support is not None else self._hull()

    @property
    def radius(self) -> float:
        """max |x| over the declared support."""

        lo, hi = self.declared_support
        return max(abs(lo), abs(hi))

    @property
    def is_compact(self) -> bool:
        lo, hi = self.declared_support
        return math.isfinite(lo) and math.isfinite(hi)

    def atom_mass_at(self, location: float) -> float:
        return math.fsum(atom.weight for atom in self.atoms if atom.location == location)

    def without_endpoint_atoms(self) -> Measure:
        """The same measure with its atoms at ±1 removed."""

        kept = tuple(atom for atom in self.atoms if abs(atom.location) != 1.0)
        return replace(self, atoms=kept, family=None, decay=None, moment_rule=None)

    def _hull(self) -> Interval:
        lows = [atom.location for atom in self.atoms] + [piece.a for piece in self.pieces]
        highs = [atom.location for atom in self.atoms] + [piece.b for piece in self.pieces]
        if not lows:
            return (0.0, 0.0)
        return (min(lows), max(highs))


__all__ = ["Atom", "DensityPiece", "Hint", "Measure", "MomentRule"]
