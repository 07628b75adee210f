"""Symbolic decay descriptors for moment sequences."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .exceptions import ValidationError


class DecayKind(str, Enum):
    """Asymptotic behaviour of q_n as n → ∞."""

    TENDS_TO_ZERO = "tends_to_zero"  # → 0 but not O(1/n)
    BIG_O_INVERSE = "O(1/n)"  # O(1/n) but not o(1/n)
    LITTLE_O_INVERSE = "o(1/n)"
    BIG_O_GEOMETRIC = "O(a^n)"  # O(aⁿ) but not o(aⁿ)
    LITTLE_O_GEOMETRIC = "o(a^n)"
    BOUNDED_NOT_DECAYING = "bounded_not_decaying"
    UNBOUNDED = "unbounded"
    UNKNOWN = "unknown"


_RATED = frozenset({DecayKind.BIG_O_GEOMETRIC, DecayKind.LITTLE_O_GEOMETRIC})


@dataclass(frozen=True)
class Decay:
    """A decay descriptor; `rate` is required exactly for the geometric kinds."""

    kind: DecayKind
    rate: float | None = None

    def __post_init__(self) -> None:
        if self.kind in _RATED:
            if self.rate is None or not math.isfinite(self.rate) or self.rate < 0:
                raise ValidationError.argument_out_of_range("rate", self.rate, "a finite real >= 0")
        elif self.rate is not None:
            raise ValidationError.argument_out_of_range("rate", self.rate, "None for non-geometric decay")

    @property
    def is_known(self) -> bool:
        return self.kind is not DecayKind.UNKNOWN

    def to_symbol(self) -> str:
        if self.rate is None:
            return self.kind.value
        return f"{self.kind.value}@{self.rate!r}"

    @classmethod
    def parse(cls, symbol: str) -> Decay:
        name, _, rate = symbol.partition("@")
        try:
            kind = DecayKind(name.strip())
        except ValueError as exc:
            raise ValidationError.schema_mismatch(f"unknown decay symbol '{symbol}'") from exc
        if kind in _RATED:
            try:
                return cls(kind, float(rate))
            except ValueError as exc:
                raise ValidationError.schema_mismatch(f"decay '{symbol}' needs a numeric rate") from exc
        return cls(kind)

    @classmethod
    def geometric(cls, rate: float, *, little_o: bool = False) -> Decay:
        return cls(DecayKind.LITTLE_O_GEOMETRIC if little_o else DecayKind.BIG_O_GEOMETRIC, float(rate))


__all__ = ["Decay", "DecayKind"]
