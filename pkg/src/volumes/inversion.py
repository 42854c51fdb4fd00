"""Volumes as coefficients of the compositional inverse of an explicit series.

x(y; s) = Σ_m (−1)^{‖m‖} y^{|m|+1} s^m / ((|m|+1)! m!) is inverted in y; the
inverse y(x; s) is the x-antiderivative of F, so V(m) is read off the
coefficient of x^{|m|+1} s^m.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Optional

from exact_core import MultiIndex, factorial, multi_indices_up_to
from series_engine import GradedSeries, VariableTable
from shared.logger import get_logger
from shared.reports import CheckResult

from .generating import bessel_x_series, generating_F
from .recursive import zograf_v

logger = get_logger(__name__)


def inverse_x_series(order: int) -> GradedSeries:
    """x(y; s) through weight ``order`` in s (x-degree ``order + 1``)."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    variables = VariableTable.s_variables(order)
    terms = {
        (m.weight + 1, m.dense(order)): Fraction((-1) ** m.norm, factorial(m.weight + 1) * m.factorial)
        for m in multi_indices_up_to(order)
    }
    return GradedSeries(variables, order + 1, order, terms, main="y")


def volume_via_inversion(order: int) -> Dict[MultiIndex, Fraction]:
    """Return V(m) for every |m| ≤ order from the reverted x(y; s)."""
    logger.info(f"Reverting x(y; s) through order {order}")
    y_of_x = inverse_x_series(order).revert()
    return {
        m: y_of_x.coefficient(m.weight + 1, m.dense(order)) * (m.weight + 1)
        for m in multi_indices_up_to(order)
    }


def _mismatch(lhs: GradedSeries, rhs: GradedSeries) -> Optional[str]:
    first = (lhs - rhs).first_term()
    if first is None:
        return None
    (d, e), value = first
    return f"{value} at {lhs.monomial_text(d, e) or '1'}"


def check_bessel_specialization(order: int, overrides: Optional[Mapping[int, Fraction]] = None) -> bool:
    """Check that at s = (1, 0, 0, …) the two sides reduce to the Zograf pair.

    y(x) = Σ_{n≥3} vₙ x^{n−2}/((n−2)!(n−3)!) and x(y) = Σ_{m≥1} (−1)^{m−1} y^m/(m!(m−1)!)
    must be compositional inverses through degree ``order``.
    """
    if order < 3:
        raise ValueError(f"check_bessel_specialization needs order >= 3, got {order}")
    overrides = overrides or {}
    y_terms = {}
    for n in range(3, order + 3):
        v = overrides.get(n, zograf_v(n))
        y_terms[(n - 2, ())] = Fraction(v, factorial(n - 2) * factorial(n - 3))
    y_of_x = GradedSeries(VariableTable.empty(), order, 0, y_terms)
    x_of_y = bessel_x_series(order, main="x")
    problem = _mismatch(x_of_y.revert(), y_of_x) or _mismatch(y_of_x.compose(x_of_y), y_of_x.main_var())
    if problem:
        logger.warning(f"Bessel specialization fails through order {order}: {problem}")
    return problem is None


def check_linear_system(order: int) -> CheckResult:
    """Check ∂²x/∂s₁∂y = −x and ∂²x/∂s_a∂y = ∂x/∂s_{a−1} for x(y; s).

    Each equation is compared in the weights where both sides are complete.
    """
    identity = "d2x/ds1dy = -x; d2x/ds_a dy = dx/ds_(a-1)"
    x = inverse_x_series(order)
    for a in range(1, order + 1):
        cap = order - a
        lhs = x.derive_main().derive_aux(f"s{a}").truncate(weight=cap)
        rhs = (-x if a == 1 else x.derive_aux(f"s{a - 1}")).truncate(weight=cap)
        problem = _mismatch(lhs, rhs)
        if problem:
            return CheckResult(
                name="linear-system", identity=identity, passed=False, order=order,
                counterexample=f"a={a}: {problem}",
            )
    return CheckResult(name="linear-system", identity=identity, passed=True, order=order)


def check_integral_of_F(order: int) -> CheckResult:
    """Check that the inverse of x(y; s) is the x-antiderivative of F(x; s)."""
    identity = "revert(x(y; s)) = integral of F dx"
    y_of_x = inverse_x_series(order).revert()
    integral = generating_F(order).truncate(degree=order + 1).integrate_main()
    problem = _mismatch(y_of_x, integral)
    return CheckResult(
        name="integral-of-F", identity=identity, passed=problem is None, order=order,
        counterexample=problem,
    )
