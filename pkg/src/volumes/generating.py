"""The generating function F(x; s) and the differential equations it satisfies."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Mapping, Optional

from exact_core import MultiIndex, factorial, multi_indices_up_to
from series_engine import GradedSeries, VariableTable
from shared.logger import get_logger
from shared.reports import CheckResult

from .recursive import volume_recursive, zograf_v
from .types import PdeReport, ResidualEntry

logger = get_logger(__name__)

Overrides = Optional[Mapping[MultiIndex, Fraction]]


def generating_F(order: int, overrides: Overrides = None) -> GradedSeries:
    """Return F(x; s) = Σ_{|m| ≤ order} V(m) x^{|m|} s^m.

    The ring has variables s1..s<order> and caps N = W = order. ``overrides``
    replaces individual volumes, which is how the checks are mutation-tested.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    overrides = overrides or {}
    variables = VariableTable.s_variables(order)
    terms = {}
    for m in multi_indices_up_to(order):
        value = overrides.get(m)
        if value is None:
            value = volume_recursive(m)
        terms[(m.weight, m.dense(order))] = value
    return GradedSeries(variables, order, order, terms)


def _drop_top(series: GradedSeries) -> GradedSeries:
    """Discard the top x-degree so that the result can be integrated in the same ring."""
    return series.truncate(degree=series.trunc_degree - 1).truncate(degree=series.trunc_degree)


def _residual(equation: str, lhs: GradedSeries, rhs: GradedSeries, degree: int) -> ResidualEntry:
    difference = (lhs - rhs).truncate(degree=degree)
    first = difference.first_term()
    if first is None:
        return ResidualEntry(equation=equation, status="exact")
    (d, e), value = first
    monomial = difference.monomial_text(d, e) or "1"
    return ResidualEntry(
        equation=equation,
        status=f"{value} at {monomial}",
        degree=d,
        weight=difference.variables.weight_of(e),
    )


def check_pde(order: int, overrides: Overrides = None) -> PdeReport:
    """Verify the system satisfied by F through x-degree ``order``.

    With H₀ = x and H_a the antiderivative of H_{a−1}·F, checks for 1 ≤ a ≤ order

    * ∂_a F = ∂_x(H_a F),
    * ∂_x H_a = H_{a−1} F,
    * H_a (∂_x F)^{a+1} = Σ_{k=0}^{a} (−1)^k F^{2k} (∂_{a−k} F)(∂_x F)^{a−k} with ∂₀ = x∂_x.

    The last identity is the closed form for H_a with the denominators cleared,
    since ∂_x F starts with s1 and cannot be inverted over the rationals.
    """
    if order < 1:
        raise ValueError(f"check_pde needs order >= 1, got {order}")
    logger.info(f"Checking the differential equations of F through order {order}")
    # one degree of headroom: derive_main loses the top degree
    top = order + 1
    F = generating_F(top, overrides)
    dF = F.derive_main()
    F2 = F * F
    H: List[GradedSeries] = [F.main_var()]
    for a in range(1, order + 1):
        H.append(_drop_top(H[a - 1] * F).integrate_main())

    def partial(k: int) -> GradedSeries:
        return F.euler_main() if k == 0 else F.derive_aux(f"s{k}")

    residuals: List[ResidualEntry] = []
    for a in range(1, order + 1):
        residuals.append(_residual(f"flow[{a}]", partial(a), (H[a] * F).derive_main(), order))
    for a in range(1, order + 1):
        residuals.append(_residual(f"antiderivative[{a}]", H[a].derive_main(), H[a - 1] * F, order))
    for a in range(1, order + 1):
        rhs = F.like()
        F2k = F.one()
        for k in range(a + 1):
            term = F2k * partial(a - k) * dF ** (a - k)
            rhs = rhs + (term if k % 2 == 0 else -term)
            F2k = F2k * F2
        residuals.append(_residual(f"closed-form[{a}]", H[a] * dF ** (a + 1), rhs, order))

    passed = all(r.status == "exact" for r in residuals)
    if not passed:
        failure = next(r for r in residuals if r.status != "exact")
        logger.warning(f"{failure.equation} fails: {failure.status}")
    return PdeReport(order=order, residuals=residuals, passed=passed)


def zograf_h(order: int, overrides: Optional[Mapping[int, Fraction]] = None) -> GradedSeries:
    """h(x) = Σ_{n≥3} vₙ x^{n−1}/((n−1)!(n−3)!) through x-degree ``order``."""
    overrides = overrides or {}
    terms = {}
    for n in range(3, order + 2):
        v = overrides.get(n, zograf_v(n))
        terms[(n - 1, ())] = Fraction(v, factorial(n - 1) * factorial(n - 3))
    return GradedSeries(VariableTable.empty(), order, 0, terms)


def bessel_x_series(order: int, main: str = "y") -> GradedSeries:
    """x(y) = Σ_{m≥1} (−1)^{m−1} y^m/(m!(m−1)!) through degree ``order``."""
    terms = {
        (m, ()): Fraction((-1) ** (m - 1), factorial(m) * factorial(m - 1))
        for m in range(1, order + 1)
    }
    return GradedSeries(VariableTable.empty(), order, 0, terms, main=main)


def check_zograf_ode(order: int, overrides: Optional[Mapping[int, Fraction]] = None) -> CheckResult:
    """Check x h″ − h′ = (x h′ − h) h″ and, for the inverse series, y x″ + x = 0."""
    if order < 3:
        raise ValueError(f"check_zograf_ode needs order >= 3, got {order}")
    h = zograf_h(order + 1, overrides)
    x = h.main_var()
    h1 = h.derive_main()
    h2 = h1.derive_main()
    lhs = (x * h2 - h1).truncate(degree=order - 1)
    rhs = ((x * h1 - h) * h2).truncate(degree=order - 1)
    identity = "x h'' - h' = (x h' - h) h''"
    if lhs != rhs:
        first = (lhs - rhs).first_term()
        return CheckResult(
            name="zograf-ode", identity=identity, passed=False, order=order,
            counterexample=f"x^{first[0][0]}: residual {first[1]}",
        )
    xs = bessel_x_series(order)
    bessel = (xs.main_var() * xs.derive_main().derive_main() + xs).truncate(degree=order - 1)
    if not bessel.is_zero():
        first = bessel.first_term()
        return CheckResult(
            name="zograf-ode", identity="y x'' + x = 0", passed=False, order=order,
            counterexample=f"y^{first[0][0]}: residual {first[1]}",
        )
    return CheckResult(name="zograf-ode", identity=f"{identity}; y x'' + x = 0", passed=True, order=order)
