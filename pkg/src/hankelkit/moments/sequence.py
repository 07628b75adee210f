"""Finite moment sequences."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from ..decay import Decay, DecayKind
from ..exceptions import ValidationError
from ..types import FloatArray, RealVector
from ..validation import as_finite_vector, validate_positive_int

if TYPE_CHECKING:
    from ..measure import Measure


@dataclass(frozen=True, eq=False)
class MomentSequence:
    """A prefix (q_0, …, q_{N−1}) of a real moment sequence.

    `decay` is the symbolic asymptotic descriptor when it is known exactly;
    `origin` is the measure the values were computed from, if any.
    """

    values: FloatArray
    decay: Decay | None = None
    origin: Measure | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        values = as_finite_vector("moments", self.values).copy()
        if values.size == 0:
            raise ValidationError.insufficient_moments(1, 0)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if self.decay is not None and self.decay.kind is DecayKind.TENDS_TO_ZERO and self.origin is not None:
            lo, hi = self.origin.declared_support
            if lo < -1.0 or hi > 1.0:
                raise ValidationError.support_not_in_unit_interval()
            if self.origin.atom_mass_at(1.0) > 0 or self.origin.atom_mass_at(-1.0) > 0:
                raise ValidationError.argument_out_of_range(
                    "decay", DecayKind.TENDS_TO_ZERO.value, "a measure without atoms at ±1"
                )

    def __len__(self) -> int:
        return int(self.values.size)

    @property
    def has_decay(self) -> bool:
        return self.decay is not None and self.decay.is_known

    def require(self, count: int) -> FloatArray:
        """The first `count` values, failing when fewer are available."""

        if count > len(self):
            raise ValidationError.insufficient_moments(count, len(self))
        return self.values[:count]

    def head(self, count: int) -> MomentSequence:
        count = validate_positive_int("count", count)
        return MomentSequence(self.require(count), decay=self.decay, origin=self.origin)

    def is_zero(self) -> bool:
        return not np.any(self.values)

    @classmethod
    def from_values(cls, values: RealVector, decay: Decay | str | None = None) -> MomentSequence:
        if isinstance(decay, str):
            decay = Decay.parse(decay)
        return cls(np.asarray(values, dtype=np.float64), decay=decay)

    @classmethod
    def from_formula(
        cls, formula: Callable[[FloatArray], FloatArray], count: int, decay: Decay | None = None
    ) -> MomentSequence:
        """Tabulate q_n = formula(n) for n = 0, …, count−1."""

        count = validate_positive_int("count", count)
        n = np.arange(count, dtype=np.float64)
        return cls(np.asarray(formula(n), dtype=np.float64), decay=decay)


def as_moment_sequence(q: MomentSequence | RealVector) -> MomentSequence:
    return q if isinstance(q, MomentSequence) else MomentSequence.from_values(q)


__all__ = ["MomentSequence", "as_moment_sequence"]
