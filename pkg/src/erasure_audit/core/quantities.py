"""
Physical and information quantities shared across modules.

Bits are Shannon bits (log base 2). Heat is carried in joules together with
the bath temperature it was evaluated at.
"""

import math
from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from erasure_audit.core.exceptions import DomainError

PROBABILITY_TOLERANCE = 1e-10


@dataclass(frozen=True, order=True)
class BitQuantity:
    """An amount of information in bits."""

    value: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value) or self.value < 0:
            raise DomainError("bits", self.value, "finite and >= 0")

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class HeatQuantity:
    """
    Heat in joules at a given bath temperature.

    Attributes:
        value: Heat in joules
        temperature: Bath temperature in kelvin
    """

    value: float
    temperature: float

    def __post_init__(self) -> None:
        if not self.temperature > 0:
            raise DomainError("temperature", self.temperature, "> 0 kelvin")
        if not math.isfinite(self.value) or self.value < 0:
            raise DomainError("heat", self.value, "finite and >= 0")

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True, eq=False)
class ProbabilityVector:
    """
    A finite distribution indexed by a declared base set.

    Example:
        >>> p = ProbabilityVector.uniform(["a", "b"])
        >>> p["a"]
        0.5
    """

    base: Sequence[Hashable]
    entries: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.float64)
        if entries.shape != (len(self.base),):
            raise DomainError("entries", entries.shape, f"shape ({len(self.base)},)")
        if len(self.base) == 0:
            raise DomainError("base", self.base, "a nonempty base set")
        if np.any(entries < 0) or not np.all(np.isfinite(entries)):
            raise DomainError("entries", entries.tolist(), "finite and nonnegative")
        total = math.fsum(entries.tolist())
        if abs(total - 1.0) > PROBABILITY_TOLERANCE:
            raise DomainError("sum(entries)", total, "1 within 1e-10")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def uniform(cls, base: Iterable[Hashable]) -> "ProbabilityVector":
        items = tuple(base)
        return cls(items, np.full(len(items), 1.0 / max(len(items), 1)))

    @classmethod
    def point(cls, base: Sequence[Hashable], at: Hashable) -> "ProbabilityVector":
        entries = np.zeros(len(base))
        entries[list(base).index(at)] = 1.0
        return cls(base, entries)

    def __getitem__(self, key: Hashable) -> float:
        return float(self.entries[self.base.index(key)])

    def __len__(self) -> int:
        return len(self.base)

    def as_dict(self) -> dict[Hashable, float]:
        return {key: float(p) for key, p in zip(self.base, self.entries, strict=True)}
