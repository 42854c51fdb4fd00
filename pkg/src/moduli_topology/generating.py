"""Generating-function identities for the Poincaré polynomials and the polynomials A_j(x, u)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

import sympy

from exact_core import factorial
from series_engine import GradedSeries, VariableTable, pow_formal
from shared.errors import LinearSystemError
from shared.logger import get_logger
from shared.reports import CheckResult

from .poincare import IntPolynomial, betti, euler_characteristic, poincare

logger = get_logger(__name__)

Q_VARIABLES = VariableTable.of(("q", 1))


def poincare_series(order: int, overrides: Optional[Mapping[int, IntPolynomial]] = None) -> GradedSeries:
    """y = Σ_{n=1}^{order} Pₙ(q) xⁿ/n! with a q-degree cap of 2·order + 4."""
    overrides = overrides or {}
    terms = {}
    for n in range(1, order + 1):
        P = overrides.get(n, poincare(n))
        for j, c in enumerate(P.coefficients):
            if c:
                terms[(n, (j,))] = Fraction(c, factorial(n))
    return GradedSeries(Q_VARIABLES, order, 2 * order + 4, terms)


def implicit_equation_check(order: int, overrides: Optional[Mapping[int, IntPolynomial]] = None) -> bool:
    """Check (1+y)^{q²} = 1 + q²x + q⁴(y−x) and (1 − q²(y−x))·y′ = 1 + y.

    The first identity is compared through x-degree ``order``, the cleared
    differential equation through ``order − 1``.
    """
    if order < 1:
        raise ValueError(f"implicit_equation_check needs order >= 1, got {order}")
    y = poincare_series(order, overrides)
    x = y.main_var()
    q2 = y.aux("q") ** 2
    lhs = pow_formal(1 + y, q2)
    rhs = 1 + q2 * x + q2 * q2 * (y - x)
    if lhs != rhs:
        logger.warning(f"Implicit equation fails through order {order}: {(lhs - rhs).first_term()}")
        return False
    ode_lhs = ((1 - q2 * (y - x)) * y.derive_main()).truncate(degree=order - 1)
    ode_rhs = (1 + y).truncate(degree=order - 1)
    if ode_lhs != ode_rhs:
        logger.warning(f"Cleared differential equation fails through order {order - 1}: {(ode_lhs - ode_rhs).first_term()}")
        return False
    return True


def q_one_check(order: int) -> CheckResult:
    """With y = Σ Pₙ(1) xⁿ/n!, check x = 2y − (1+y)·log(1+y)."""
    identity = "x = 2y - (1+y) log(1+y) at q = 1"
    terms = {(n, ()): Fraction(euler_characteristic(n), factorial(n)) for n in range(1, order + 1)}
    y = GradedSeries(VariableTable.empty(), order, 0, terms)
    rhs = 2 * y - (1 + y) * (1 + y).log()
    difference = rhs - y.main_var()
    first = difference.first_term()
    return CheckResult(
        name="q-one", identity=identity, passed=first is None, order=order,
        counterexample=None if first is None else f"x^{first[0][0]}: residual {first[1]}",
    )


@dataclass
class APolynomial:
    """A_j(x, u) with Σ_{n≥1} B_j(n)xⁿ/n! = A_j(x, eˣ); keys are (i, k) for x^i u^k."""

    j: int
    coefficients: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)
    equations: int = 0
    unknowns: int = 0

    def as_expr(self) -> sympy.Expr:
        x, u = sympy.symbols("x u")
        return sympy.expand(
            sum(
                (sympy.Rational(c.numerator, c.denominator) * x**i * u**k for (i, k), c in self.coefficients.items()),
                sympy.Integer(0),
            )
        )

    def to_text(self) -> str:
        return str(self.as_expr())


def _unknowns(j: int) -> List[Tuple[int, int]]:
    # weighted degree i + 2k <= j + 2, and u | A_j for j >= 1
    smallest_k = 1 if j >= 1 else 0
    return [(i, k) for k in range(smallest_k, j // 2 + 2) for i in range(0, j + 3 - 2 * k)]


def recover_A_polynomials(j: int, n_max: int) -> APolynomial:
    """Solve exactly for the coefficients of A_j from B_j(1..n_max).

    Raises:
        LinearSystemError: If the system is inconsistent or does not pin A_j down.
    """
    if j < 0 or j % 2 or j > 4:
        raise ValueError(f"recover_A_polynomials needs j in (0, 2, 4), got {j}")
    if n_max < j + 8:
        raise ValueError(f"n_max must be at least {j + 8} for an overdetermined system, got {n_max}")
    unknowns = _unknowns(j)
    rows = []
    rhs = []
    for n in range(n_max + 1):
        # coefficient of xⁿ in x^i e^{kx} is k^{n−i}/(n−i)!
        rows.append(
            [
                sympy.Rational(k ** (n - i), factorial(n - i)) if n >= i else sympy.Integer(0)
                for i, k in unknowns
            ]
        )
        target = Fraction(betti(j, n), factorial(n)) if n >= 1 else Fraction(0)
        rhs.append(sympy.Rational(target.numerator, target.denominator))
    matrix = sympy.Matrix(rows)
    try:
        solution, free = matrix.gauss_jordan_solve(sympy.Matrix(rhs))
    except ValueError as e:
        raise LinearSystemError(f"A_{j}: inconsistent system with {len(rows)} equations") from e
    if free.shape[0]:
        raise LinearSystemError(f"A_{j}: {free.shape[0]} coefficients left undetermined")
    coefficients = {}
    for (i, k), value in zip(unknowns, solution):
        value = sympy.Rational(value)
        if value != 0:
            coefficients[(i, k)] = Fraction(int(value.p), int(value.q))
    logger.debug(f"A_{j} recovered from {len(rows)} equations in {len(unknowns)} unknowns")
    return APolynomial(j=j, coefficients=coefficients, equations=len(rows), unknowns=len(unknowns))


def leading_coefficient_law(j: int, l: int) -> Fraction:
    """Predicted leading coefficient of p_{j,l}(n) for B_{2j}: (−1)^l/(2^l l!)·(j−l+1)^{j−2l−1}/(j−l)!."""
    k = j - l + 1
    return Fraction((-1) ** l, 2**l * factorial(l)) * Fraction(k) ** (j - 2 * l - 1) / factorial(j - l)


def leading_coefficient_check(j: int, A: Optional[APolynomial] = None) -> CheckResult:
    """Compare the recovered A_{2j} with the leading-coefficient law for every l ≤ j.

    The polynomial multiplying (j+1−l)ⁿ in B_{2j}(n) has leading coefficient
    c_{2l,k}·k^{−2l} where c_{2l,k} is the coefficient of x^{2l}u^k in A_{2j}.
    """
    identity = "leading coefficient of p_{j,l}"
    A = A or recover_A_polynomials(2 * j, 2 * j + 10)
    for l in range(j + 1):
        k = j + 1 - l
        observed = A.coefficients.get((2 * l, k), Fraction(0)) / Fraction(k) ** (2 * l)
        expected = leading_coefficient_law(j, l)
        if observed != expected:
            return CheckResult(
                name="leading-coefficient", identity=identity, passed=False, order=j,
                counterexample=f"l={l}: {observed} != {expected}",
            )
    return CheckResult(name="leading-coefficient", identity=identity, passed=True, order=j)
