"""Finite-support multi-indices m = (m(1), m(2), ...)."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Dict, Iterable, Mapping, Tuple

from shared.errors import MultiIndexParseError

from .factorials import factorial


@dataclass(frozen=True, order=True)
class MultiIndex:
    """A multi-index stored as sorted ``(a, m(a))`` pairs with ``m(a) > 0``.

    This canonical form is the memoization key everywhere, so two
    multi-indices are equal exactly when their sparse maps are equal.
    """

    entries: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        previous = 0
        for a, count in self.entries:
            if a <= previous:
                raise ValueError(f"Indices must be positive and strictly increasing: {self.entries}")
            if count <= 0:
                raise ValueError(f"Multiplicities must be positive: {self.entries}")
            previous = a

    @classmethod
    def zero(cls) -> "MultiIndex":
        return cls()

    @classmethod
    def delta(cls, a: int, count: int = 1) -> "MultiIndex":
        """Return ``count * delta_a``."""
        if count == 0:
            return cls()
        return cls(((a, count),))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "MultiIndex":
        return cls(tuple(sorted((a, c) for a, c in mapping.items() if c)))

    @classmethod
    def from_multiplicities(cls, multiplicities: Iterable[int]) -> "MultiIndex":
        """Build from the dense list ``m(1), m(2), ...`` (trailing zeros allowed)."""
        entries = []
        for a, count in enumerate(multiplicities, start=1):
            if count < 0:
                raise ValueError(f"Negative multiplicity {count} at index {a}")
            if count:
                entries.append((a, count))
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "MultiIndex":
        """Parse the text form ``"m(1),m(2),...,m(A)"``; ``"2,1"`` is 2δ₁+δ₂."""
        stripped = text.strip()
        if not stripped:
            raise MultiIndexParseError("Empty multi-index text")
        try:
            counts = [int(part) for part in stripped.split(",")]
        except ValueError as e:
            raise MultiIndexParseError(f"Invalid multi-index text {text!r}: {e}") from e
        if any(c < 0 for c in counts):
            raise MultiIndexParseError(f"Negative multiplicity in {text!r}")
        return cls.from_multiplicities(counts)

    @property
    def weight(self) -> int:
        return sum(a * c for a, c in self.entries)

    @property
    def norm(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def factorial(self) -> int:
        return prod(factorial(c) for _, c in self.entries)

    @property
    def max_index(self) -> int:
        return self.entries[-1][0] if self.entries else 0

    def multiplicity(self, a: int) -> int:
        for index, count in self.entries:
            if index == a:
                return count
        return 0

    def indices(self) -> Tuple[int, ...]:
        return tuple(a for a, _ in self.entries)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    def dense(self, length: int | None = None) -> Tuple[int, ...]:
        """Dense multiplicities ``m(1), ..., m(length)``."""
        size = self.max_index if length is None else length
        mapping = self.as_dict()
        return tuple(mapping.get(a, 0) for a in range(1, size + 1))

    def to_text(self) -> str:
        if not self.entries:
            return "0"
        return ",".join(str(c) for c in self.dense())

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        merged = self.as_dict()
        for a, c in other.entries:
            merged[a] = merged.get(a, 0) + c
        return MultiIndex.from_mapping(merged)

    def __sub__(self, other: "MultiIndex") -> "MultiIndex":
        merged = self.as_dict()
        for a, c in other.entries:
            left = merged.get(a, 0) - c
            if left < 0:
                raise ValueError(f"Cannot subtract {other} from {self}")
            merged[a] = left
        return MultiIndex.from_mapping(merged)

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        return " + ".join(f"{c}δ{a}" if c > 1 else f"δ{a}" for a, c in self.entries)


def weight(m: MultiIndex) -> int:
    """Return |m| = Σ a·m(a)."""
    return m.weight


def norm(m: MultiIndex) -> int:
    """Return ‖m‖ = Σ m(a)."""
    return m.norm


def multi_factorial(m: MultiIndex) -> int:
    """Return m! = ∏ m(a)!."""
    return m.factorial
