"""Poincaré polynomials Pₙ(q) of M̄_{0,n+1} and their Betti numbers."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import pandas as pd

from exact_core import binomial
from shared.errors import IntegralityError
from shared.logger import get_logger
from shared.reports import CheckResult

logger = get_logger(__name__)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coefficients[j]`` multiplies q^j. No trailing zeros."""

    coefficients: Tuple[int, ...] = (1,)
    variable: str = "q"

    def __post_init__(self) -> None:
        coefficients = list(self.coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, j: int) -> int:
        return self.coefficients[j] if 0 <= j < len(self.coefficients) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self.coefficient(j) + other.coefficient(j) for j in range(size)), self.variable)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coefficients or not other.coefficients:
            return IntPolynomial((), self.variable)
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out), self.variable)

    def scale(self, factor: int) -> "IntPolynomial":
        return IntPolynomial(tuple(factor * c for c in self.coefficients), self.variable)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by q^k."""
        return IntPolynomial((0,) * k + self.coefficients, self.variable)

    def evaluate(self, value: int) -> int:
        result = 0
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def odd_coefficients_vanish(self) -> bool:
        return not any(self.coefficients[1::2])

    def to_text(self) -> str:
        pieces = []
        for j, c in enumerate(self.coefficients):
            if not c:
                continue
            power = "" if j == 0 else (self.variable if j == 1 else f"{self.variable}^{j}")
            if not power:
                body = str(abs(c))
            elif abs(c) == 1:
                body = power
            else:
                body = f"{abs(c)}{power}"
            pieces.append(("-" if c < 0 else "+", body))
        if not pieces:
            return "0"
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_text()


class _PoincareTable:
    """P₁, P₂, … grown on demand by P_{n+1} = Pₙ + q² Σ_{m=2}^{n} C(n,m) P_m P_{n+1−m}."""

    def __init__(self) -> None:
        self._values: List[IntPolynomial] = [IntPolynomial((1,)), IntPolynomial((1,))]  # index 0 unused
        self._lock = threading.Lock()

    def __call__(self, n: int) -> IntPolynomial:
        if n < len(self._values):
            return self._values[n]
        with self._lock:
            values = self._values
            while len(values) <= n:
                k = len(values) - 1  # computing P_{k+1}
                total = IntPolynomial(())
                for m in range(2, k + 1):
                    total = total + (values[m] * values[k + 1 - m]).scale(binomial(k, m))
                values.append(values[k] + total.shift(2))
            return values[n]


_POINCARE = _PoincareTable()


def poincare(n: int) -> IntPolynomial:
    """Return Pₙ(q) = Σ_j dim H^j(M̄_{0,n+1}) q^j.

    Raises:
        ValueError: If n < 1.
    """
    if n < 1:
        raise ValueError(f"poincare needs n >= 1, got {n}")
    return _POINCARE(n)


def betti(j: int, n: int) -> int:
    """Return B_j(n), the coefficient of q^j in Pₙ (0 out of range)."""
    if j < 0:
        raise ValueError(f"Betti index must be nonnegative, got {j}")
    return poincare(n).coefficient(j)


def betti_closed(j: int, n: int) -> int:
    """Closed forms of B₂(n) and B₄(n).

    B₂(n) = 2ⁿ − (n²+n+2)/2,
    B₄(n) = (3/2)3ⁿ − (n²+5n+8)2ⁿ/4 + (3n⁴+2n³+21n²+22n+12)/24.
    """
    if n < 1:
        raise ValueError(f"betti_closed needs n >= 1, got {n}")
    if j == 2:
        value = Fraction(2**n) - Fraction(n * n + n + 2, 2)
    elif j == 4:
        value = (
            Fraction(3, 2) * 3**n
            - Fraction(n * n + 5 * n + 8, 4) * 2**n
            + Fraction(3 * n**4 + 2 * n**3 + 21 * n**2 + 22 * n + 12, 24)
        )
    else:
        raise ValueError(f"betti_closed knows j = 2 and j = 4 only, got {j}")
    if value.denominator != 1:
        raise IntegralityError(f"B_{j}({n}) closed form gave {value}")
    return value.numerator


_EULER: List[int] = [1, 1]  # index 0 unused; P₁(1) = 1
_EULER_LOCK = threading.Lock()


def euler_characteristic(n: int) -> int:
    """χ(M̄_{0,n+1}) = Pₙ(1), by the q = 1 specialization of the recursion."""
    if n < 1:
        raise ValueError(f"euler_characteristic needs n >= 1, got {n}")
    with _EULER_LOCK:
        while len(_EULER) <= n:
            k = len(_EULER) - 1
            _EULER.append(_EULER[k] + sum(binomial(k, m) * _EULER[m] * _EULER[k + 1 - m] for m in range(2, k + 1)))
        return _EULER[n]


def palindromic_report(n_max: int) -> CheckResult:
    """Poincaré duality for P₁..P_{n_max}; reported, never raised."""
    identity = "P_n(q) is palindromic"
    for n in range(1, n_max + 1):
        if not poincare(n).is_palindromic():
            logger.warning(f"P_{n} = {poincare(n)} is not palindromic")
            return CheckResult(
                name="palindromic", identity=identity, passed=False, order=n_max,
                counterexample=f"P_{n} = {poincare(n)}",
            )
    return CheckResult(name="palindromic", identity=identity, passed=True, order=n_max)


def betti_table(n_max: int) -> pd.DataFrame:
    """One row per n: the coefficient list of Pₙ and χ = Pₙ(1)."""
    rows = [
        {
            "n": n,
            "coefficients": " ".join(str(c) for c in poincare(n).coefficients),
            "chi": euler_characteristic(n),
        }
        for n in range(1, n_max + 1)
    ]
    return pd.DataFrame(rows, columns=["n", "coefficients", "chi"])
