"""Cached factorials."""

import math
import threading
from typing import List


class FactorialTable:
    """Factorials 0!, 1!, ..., bound! kept in memory.

    The table grows lazily; arguments beyond the bound are computed on demand
    and not stored. Behaves as a pure lookup table under concurrent use.
    """

    def __init__(self, bound: int = 512):
        if bound < 0:
            raise ValueError(f"Factorial cache bound must be nonnegative, got {bound}")
        self.bound = bound
        self._values: List[int] = [1]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"Factorial of negative integer {n}")
        if n > self.bound:
            return math.factorial(n)
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self._values) <= n:
                self._values.append(self._values[-1] * len(self._values))
            return self._values[n]


_table = FactorialTable()


def factorial(n: int) -> int:
    """Return n! using the process-wide cache."""
    return _table(n)


def set_factorial_cache_bound(bound: int) -> None:
    """Replace the process-wide cache by one with a different bound."""
    global _table
    _table = FactorialTable(bound)
