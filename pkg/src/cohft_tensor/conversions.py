"""Bijections between the C, B and s coordinates of a one-dimensional CohFT.

Orders shift by three: a potential of order N (C₃..C_N) corresponds to U(η)
and canonical coordinates of order N − 3.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

from exact_core import MultiIndex, factorial, multi_indices_of_weight
from series_engine import GradedSeries, VariableTable

from .coords import PotentialCoeffs, SCoords, UCoeffs


def _scalar_series(coefficients: dict, degree: int, main: str) -> GradedSeries:
    return GradedSeries(VariableTable.empty(), degree, 0, {(d, ()): c for d, c in coefficients.items()}, main=main)


def c_to_b(C: PotentialCoeffs) -> UCoeffs:
    """Invert y = Φ″(x) = Σ Cₙ x^{n−2}/(n−2)! and read Bₙ off x(y) = Σ Bₙ y^{n+1}/(n+1)!."""
    degree = C.order - 2
    y_of_x = _scalar_series({n - 2: C[n] / factorial(n - 2) for n in range(3, C.order + 1)}, degree, "x")
    x_of_y = y_of_x.revert()
    return UCoeffs(C.u_order, {n: x_of_y.coefficient(n + 1) * factorial(n + 1) for n in range(C.u_order + 1)})


def b_to_c(B: UCoeffs) -> PotentialCoeffs:
    """Inverse of c_to_b."""
    degree = B.order + 1
    x_of_y = _scalar_series({n + 1: B[n] / factorial(n + 1) for n in range(B.order + 1)}, degree, "y")
    y_of_x = x_of_y.revert()
    order = B.order + 3
    return PotentialCoeffs(order, {n: y_of_x.coefficient(n - 2) * factorial(n - 2) for n in range(3, order + 1)})


def s_to_b(s: SCoords) -> UCoeffs:
    """U(η) = exp(−s₁η − s₂η² − ⋯)."""
    exponent = _scalar_series({a: -s[a] for a in range(1, s.order + 1)}, s.order, "η")
    U = exponent.exp()
    return UCoeffs(s.order, {n: U.coefficient(n) for n in range(s.order + 1)})


def b_to_s(B: UCoeffs) -> SCoords:
    """s_a is the coefficient of η^a in −log U(η)."""
    U = _scalar_series(dict(B.B), B.order, "η")
    minus_log = -U.log()
    return SCoords(B.order, {a: minus_log.coefficient(a) for a in range(1, B.order + 1)})


def _explicit_sum(m: MultiIndex, values: dict) -> Fraction:
    """(Σ(k+1)m(k))! / (∏((k+1)!)^{m(k)} · m!) · ∏ values[k]^{m(k)}."""
    top = sum((k + 1) * c for k, c in m.entries)
    denominator = prod(factorial(k + 1) ** c for k, c in m.entries) * m.factorial
    return Fraction(factorial(top), denominator) * prod((values[k] ** c for k, c in m.entries), start=Fraction(1))


def explicit_b_from_c(C: PotentialCoeffs) -> UCoeffs:
    """Bₙ as the closed sum over |m| = n of the (−C_{k+3})^{m(k)}."""
    values = {k: -C[k + 3] for k in range(1, C.u_order + 1)}
    return UCoeffs(
        C.u_order,
        {n: sum((_explicit_sum(m, values) for m in multi_indices_of_weight(n)), Fraction(0)) for n in range(C.u_order + 1)},
    )


def explicit_c_from_b(B: UCoeffs) -> PotentialCoeffs:
    """Cₙ as the closed sum over |m| = n − 3 of the (−B_k)^{m(k)}."""
    values = {k: -B[k] for k in range(1, B.order + 1)}
    order = B.order + 3
    return PotentialCoeffs(
        order,
        {n: sum((_explicit_sum(m, values) for m in multi_indices_of_weight(n - 3)), Fraction(0)) for n in range(3, order + 1)},
    )
