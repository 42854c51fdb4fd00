"""Tensor product of one-dimensional CohFTs and the identities around it."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, Optional

from exact_core import factorial, multi_indices_of_weight
from series_engine import GradedSeries, VariableTable
from shared.errors import OrderMismatchError
from shared.logger import get_logger
from volumes import inverse_x_series, volume_recursive

from .conversions import b_to_c, c_to_b
from .coords import PotentialCoeffs, SCoords, UCoeffs

logger = get_logger(__name__)


def tensor_product(left: PotentialCoeffs, right: PotentialCoeffs) -> PotentialCoeffs:
    """U_{A′⊗A″}(η) = U_{A′}(η)·U_{A″}(η), converted back to potential coefficients."""
    if left.order != right.order:
        raise OrderMismatchError(f"Cannot tensor theories of order {left.order} and {right.order}")
    b1, b2 = c_to_b(left), c_to_b(right)
    order = b1.order
    product = {n: sum((b1[k] * b2[n - k] for k in range(n + 1)), Fraction(0)) for n in range(order + 1)}
    return b_to_c(UCoeffs(order, product))


def potential_from_s(s: SCoords, order: int) -> PotentialCoeffs:
    """Cₙ = (n−3)!·Σ_{|m|=n−3} V(m)·s^m, i.e. Φ‴ = F(x; s).

    Raises:
        OrderMismatchError: If ``s`` has fewer than order − 3 coordinates.
    """
    if s.order < order - 3:
        raise OrderMismatchError(f"A potential of order {order} needs s1..s{order - 3}, got s1..s{s.order}")
    C: Dict[int, Fraction] = {}
    for n in range(3, order + 1):
        total = Fraction(0)
        for m in multi_indices_of_weight(n - 3):
            monomial = Fraction(1)
            for a, count in m.entries:
                monomial *= s[a] ** count
            if monomial:
                total += volume_recursive(m) * monomial
        C[n] = total * factorial(n - 3)
    return PotentialCoeffs(order, C)


def explicit_tensor_laws(left: PotentialCoeffs, right: PotentialCoeffs) -> Dict[int, Fraction]:
    """C₄..C₇ of the tensor product by the closed polynomial laws (as far as both orders allow)."""
    order = min(left.order, right.order)

    def c(theory: PotentialCoeffs, n: int) -> Fraction:
        return theory[n] if n <= theory.order else Fraction(0)

    a4, a5, a6, a7 = (c(left, n) for n in (4, 5, 6, 7))
    b4, b5, b6, b7 = (c(right, n) for n in (4, 5, 6, 7))
    laws = {
        4: a4 + b4,
        5: a5 + 5 * a4 * b4 + b5,
        6: a6 + (8 * a4**2 + 9 * a5) * b4 + a4 * (8 * b4**2 + 9 * b5) + b6,
        7: (
            a7
            + (35 * a4 * a5 + 14 * a6) * b4
            + (61 * a4**2 * b4**2 + 33 * a4**2 * b5 + 33 * a5 * b4**2 + 19 * a5 * b5)
            + a4 * (35 * b4 * b5 + 14 * b6)
            + b7
        ),
    }
    return {n: v for n, v in laws.items() if n <= order}


def laplace_identity_check(order: int, x_of_y: Optional[GradedSeries] = None) -> bool:
    """Check that the formal Laplace transform of x(y; s), times η^{−2}, is exp(−Σ s_a η^a).

    Term-wise, y^k is sent to k!·η^{k−1}. ``x_of_y`` defaults to the series of
    the inversion theorem and may be replaced to test the check itself.
    """
    if order < 1:
        raise ValueError(f"laplace_identity_check needs order >= 1, got {order}")
    x_of_y = inverse_x_series(order) if x_of_y is None else x_of_y
    variables = VariableTable.s_variables(order)
    transformed = GradedSeries(
        variables,
        order,
        order,
        {(d - 1, e): c * factorial(d) for (d, e), c in x_of_y.terms.items() if d >= 1},
        main="η",
    )
    exponent = transformed.like({(a, variables.unit_vector(f"s{a}")): -1 for a in range(1, order + 1)})
    expected = exponent.exp()
    if transformed != expected:
        first = (transformed - expected).first_term()
        logger.warning(f"Laplace identity fails through order {order}: {first}")
        return False
    return True


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_potential(rng: random.Random, order: int) -> PotentialCoeffs:
    return PotentialCoeffs(order, {n: random_rational(rng) for n in range(4, order + 1)})


def random_s(rng: random.Random, order: int) -> SCoords:
    return SCoords(order, {a: random_rational(rng) for a in range(1, order + 1)})
