"""Weighted auxiliary variables of a graded series ring."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple


@dataclass(frozen=True)
class VariableTable:
    """Ordered auxiliary variables with positive integer weights.

    By convention ``s_a`` has weight ``a``, ``q`` has weight 1 and ``u`` weight 2.
    """

    names: Tuple[str, ...] = ()
    weights: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.names) != len(self.weights):
            raise ValueError(
                f"{len(self.names)} variable names but {len(self.weights)} weights"
            )
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"Duplicate variable names in {self.names}")
        if any(w <= 0 for w in self.weights):
            raise ValueError(f"Variable weights must be positive, got {self.weights}")

    @classmethod
    def empty(cls) -> "VariableTable":
        return cls()

    @classmethod
    def s_variables(cls, count: int) -> "VariableTable":
        """The table ``s1, ..., s<count>`` with ``weight(s_a) = a``."""
        return cls(
            tuple(f"s{a}" for a in range(1, count + 1)), tuple(range(1, count + 1))
        )

    @classmethod
    def of(cls, *pairs: Tuple[str, int]) -> "VariableTable":
        return cls(tuple(name for name, _ in pairs), tuple(w for _, w in pairs))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"Unknown auxiliary variable {name!r}; known: {list(self.names)}") from None

    def weight_of(self, exponents: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exponents))

    def unit_vector(self, name: str, power: int = 1) -> Tuple[int, ...]:
        position = self.index(name)
        return tuple(power if i == position else 0 for i in range(len(self.names)))

    @property
    def zero_exponent(self) -> Tuple[int, ...]:
        return (0,) * len(self.names)
