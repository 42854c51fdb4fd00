"""Verification suites aggregating every identity check of the library.

Each suite returns a ``SuiteReport``; nothing here raises on a failed identity.
The ``order`` argument bounds every truncation a suite performs.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from asymptotics import (
    betti_asymptotic_ratio,
    constant_C,
    euler_ratio,
    find_gamma0,
    richardson,
    wp_ratio,
)
from cohft_algebra import (
    OmegaExpression,
    monomials_to_tuples,
    recursion_counterexample,
    roundtrip_counterexample,
    tuple_to_monomials,
    u_series_counterexample,
)
from cohft_tensor import (
    PotentialCoeffs,
    b_to_c,
    b_to_s,
    c_to_b,
    explicit_b_from_c,
    explicit_c_from_b,
    explicit_tensor_laws,
    laplace_identity_check,
    potential_from_s,
    random_potential,
    random_s,
    s_to_b,
    tensor_product,
)
from exact_core import MultiIndex, binomial, factorial, multi_indices_up_to
from moduli_topology import (
    IntPolynomial,
    betti,
    betti_closed,
    implicit_equation_check,
    leading_coefficient_check,
    palindromic_report,
    poincare,
    q_one_check,
    recover_A_polynomials,
)
from shared.errors import IntegralityError
from shared.logger import get_logger
from shared.reports import CheckResult, SuiteReport
from volumes import (
    KNOWN_INTEGRALS,
    KNOWN_ZOGRAF,
    check_bessel_specialization,
    check_integral_of_F,
    check_linear_system,
    check_pde,
    check_zograf_ode,
    intersection_integral,
    volume_closed,
    volume_recursive,
    volume_via_inversion,
    zograf_closed,
    zograf_v,
)

logger = get_logger(__name__)

SUITE_NAMES = ("pde", "inversion", "laplace", "omega", "appendix", "asym")
DEFAULT_SEED = 20240601

GAMMA0 = 2.4048255577
GROWTH_CONSTANT = 2.496918339
WP_LIMIT = 1.3620537

# A_j(x, u) keyed by (i, k) for x^i u^k
EXPECTED_A = {
    0: {(0, 1): Fraction(1), (0, 0): Fraction(-1)},
    2: {(0, 2): Fraction(1), (0, 1): Fraction(-1), (1, 1): Fraction(-1), (2, 1): Fraction(-1, 2)},
    4: {
        (0, 3): Fraction(3, 2),
        (0, 2): Fraction(-2),
        (1, 2): Fraction(-3),
        (2, 2): Fraction(-1),
        (0, 1): Fraction(1, 2),
        (1, 1): Fraction(2),
        (2, 1): Fraction(2),
        (3, 1): Fraction(5, 6),
        (4, 1): Fraction(1, 8),
    },
}


def _result(name: str, identity: str, problem: Optional[str], order: Optional[int] = None, soft: bool = False) -> CheckResult:
    if problem:
        logger.warning(f"{name} fails: {problem}")
    return CheckResult(
        name=name, identity=identity, passed=problem is None, order=order,
        counterexample=problem, soft=soft,
    )


def pde_suite(order: int = 6, seed: Optional[int] = None) -> SuiteReport:
    """The differential system of F and Zograf's ODE."""
    report = check_pde(order)
    results = [
        CheckResult(
            name=entry.equation,
            identity=entry.equation.split("[")[0] + " equation of F",
            passed=entry.status == "exact",
            order=order,
            counterexample=None if entry.status == "exact" else f"{entry.equation}: {entry.status}",
        )
        for entry in report.residuals
    ]
    results.append(check_zograf_ode(max(order, 3)))
    return SuiteReport(suite="pde", order=order, seed=seed, results=results)


def _triple_agreement(order: int) -> Optional[str]:
    inverted = volume_via_inversion(order)
    for m in multi_indices_up_to(order):
        values = (volume_recursive(m), volume_closed(m), inverted[m])
        if len(set(values)) != 1:
            return f"m = {m.to_text()}: recursive {values[0]}, closed {values[1]}, inversion {values[2]}"
    return None


def _special_values(order: int) -> Optional[str]:
    for a in range(1, order + 3):
        value = volume_recursive(MultiIndex.delta(a))
        if value != Fraction(1, factorial(a)):
            return f"V(delta_{a}) = {value}"
    for a in range(1, order):
        for b in range(a, order + 1 - a):
            m = MultiIndex.delta(a) + MultiIndex.delta(b)
            expected = Fraction(binomial(a + b + 2, a + 1) - 1, m.factorial * factorial(a + b))
            if volume_recursive(m) != expected:
                return f"V({m.to_text()}) = {volume_recursive(m)}, expected {expected}"
    return None


def _golden_integrals(order: int) -> Optional[str]:
    for text, expected in KNOWN_INTEGRALS.items():
        m = MultiIndex.parse(text)
        if m.weight > order:
            continue
        observed = intersection_integral(m)
        if observed != expected:
            return f"integral of omega^({text}) = {observed}, expected {expected}"
    return None


def _zograf_bridge(order: int) -> Optional[str]:
    for n, expected in KNOWN_ZOGRAF.items():
        if zograf_v(n) != expected:
            return f"v_{n} = {zograf_v(n)}, expected {expected}"
    for n in range(3, order + 4):
        via_volume = volume_recursive(MultiIndex.delta(1, n - 3)) * factorial(n - 3) ** 2
        values = (zograf_v(n), zograf_closed(n), via_volume)
        if len(set(values)) != 1:
            return f"n = {n}: recursion {values[0]}, closed {values[1]}, volume {values[2]}"
    return None


def _pivot_consistency(order: int) -> Optional[str]:
    for m in multi_indices_up_to(order):
        default = volume_recursive(m)
        for a in m.indices():
            value = volume_recursive(m, pivot=a)
            if value != default:
                return f"m = {m.to_text()}: reducing at {a} gives {value}, default pivot gives {default}"
    return None


def _integrality(order: int) -> Optional[str]:
    for m in multi_indices_up_to(order):
        try:
            intersection_integral(m)
        except IntegralityError as e:
            return str(e)
    return None


def inversion_suite(order: int = 6, seed: Optional[int] = None) -> SuiteReport:
    """Agreement of the three volume algorithms and the inversion theorem."""
    bessel_order = max(order, 3)
    results = [
        _result("triple-method", "recursion = correlator sum = reversion", _triple_agreement(order), order),
        _result("special-values", "V(delta_a) = 1/a!; V(delta_a + delta_b) closed form", _special_values(order), order),
        _result("golden-integrals", "printed coefficients of F", _golden_integrals(order), order),
        _result("zograf-bridge", "v_n = V((n-3) delta_1) ((n-3)!)^2 = closed sum", _zograf_bridge(order), order),
        _result(
            "bessel-specialization",
            "at s = (1, 0, ...) y(x) inverts the Bessel series",
            None if check_bessel_specialization(bessel_order) else "see log",
            bessel_order,
        ),
        check_linear_system(order),
        check_integral_of_F(order),
        _result("pivot-consistency", "V(m) does not depend on the index the recursion reduces at", _pivot_consistency(order), order),
        _result("integrality", "|m|! m! V(m) is a nonnegative integer", _integrality(order), order),
    ]
    return SuiteReport(suite="inversion", order=order, seed=seed, results=results)


def _coordinate_roundtrips(rng: random.Random, order: int) -> Optional[str]:
    C = random_potential(rng, order)
    B = c_to_b(C)
    if b_to_c(B) != C:
        return f"C -> B -> C changed {C.C} into {b_to_c(B).C}"
    if s_to_b(b_to_s(B)) != B:
        return f"B -> s -> B changed {B.B}"
    if explicit_b_from_c(C) != B:
        return f"explicit B(C) {explicit_b_from_c(C).B} vs reversion {B.B}"
    if explicit_c_from_b(B) != C:
        return f"explicit C(B) {explicit_c_from_b(B).C} vs reversion {C.C}"
    return None


def _tensor_laws(rng: random.Random, order: int, theories: int = 10) -> Optional[str]:
    for trial in range(theories):
        left, right = random_potential(rng, order), random_potential(rng, order)
        product = tensor_product(left, right)
        for n, expected in explicit_tensor_laws(left, right).items():
            if product[n] != expected:
                return f"trial {trial}: C{n} = {product[n]}, law gives {expected}"
    return None


def _additivity(rng: random.Random, order: int) -> Optional[str]:
    s1, s2 = random_s(rng, order - 3), random_s(rng, order - 3)
    left, right = potential_from_s(s1, order), potential_from_s(s2, order)
    if b_to_c(s_to_b(s1)) != left:
        return f"potential from F {left.C} vs from exp(-sum s eta^a) {b_to_c(s_to_b(s1)).C}"
    combined = potential_from_s(s1 + s2, order)
    product = tensor_product(left, right)
    if combined != product:
        return f"s' + s'' gives {combined.C}, tensor product gives {product.C}"
    return None


def laplace_suite(order: int = 6, seed: Optional[int] = None) -> SuiteReport:
    """Coordinates of one-dimensional CohFTs and their tensor product."""
    seed = DEFAULT_SEED if seed is None else seed
    rng = random.Random(seed)
    theory_order = max(order, 7)
    results = [
        _result(
            "laplace",
            "Laplace transform of x(y; s) is eta^2 exp(-sum s_a eta^a)",
            None if laplace_identity_check(order) else "see log",
            order,
        ),
        _result("coordinates", "C <-> B <-> s roundtrips and explicit sums", _coordinate_roundtrips(rng, theory_order), theory_order),
        _result("tensor-laws", "C4..C7 of a tensor product", _tensor_laws(rng, theory_order), theory_order),
        _result("additivity", "canonical coordinates add under tensor product", _additivity(rng, theory_order), theory_order),
    ]
    return SuiteReport(suite="laplace", order=order, seed=seed, results=results)


def _omega_expansions() -> Optional[str]:
    cases = [
        (tuple_to_monomials((1, 2)), {(1, 2): 1, (3,): 1}),
        (monomials_to_tuples((1, 2)), {(1, 2): 1, (3,): -1}),
        (tuple_to_monomials((1, 2, 4)), {(1, 2, 4): 1, (3, 4): 1, (2, 5): 1, (1, 6): 1, (7,): 2}),
        (monomials_to_tuples((1, 2, 4)), {(1, 2, 4): 1, (3, 4): -1, (2, 5): -1, (1, 6): -1, (7,): 1}),
    ]
    for observed, expected in cases:
        if observed != OmegaExpression(expected, observed.basis):
            return f"{observed} expected {OmegaExpression(expected, observed.basis)}"
    return None


def omega_suite(order: int = 6, seed: Optional[int] = None) -> SuiteReport:
    """Tuple classes versus ω-monomials; ``order`` is not used beyond the report."""
    u_problem = u_series_counterexample(2, 2) or u_series_counterexample(3, 2)
    results = [
        _result("omega-expansions", "omega(1,2) and omega(1,2,4) in both bases", _omega_expansions()),
        _result("omega-recursion", "recursive expansion = permutation-cycle expansion", recursion_counterexample()),
        _result("omega-roundtrip", "monomials -> tuples -> monomials is the identity", roundtrip_counterexample()),
        _result("u-series", "U-series peeling and product identities", u_problem, 2),
    ]
    return SuiteReport(suite="omega", order=order, seed=seed, results=results)


def _small_poincare() -> Optional[str]:
    for n, expected in ((3, IntPolynomial((1, 0, 1))), (4, IntPolynomial((1, 0, 5, 0, 1)))):
        if poincare(n) != expected:
            return f"P_{n} = {poincare(n)}, expected {expected}"
    return None


def _betti_closed_forms(n_max: int = 30) -> Optional[str]:
    for j in (2, 4):
        for n in range(1, n_max + 1):
            if betti(j, n) != betti_closed(j, n):
                return f"B_{j}({n}) = {betti(j, n)}, closed form {betti_closed(j, n)}"
    return None


def _a_polynomials() -> Optional[str]:
    for j, expected in EXPECTED_A.items():
        recovered = recover_A_polynomials(j, j + 10)
        if recovered.coefficients != expected:
            return f"A_{j} = {recovered.to_text()}"
    return None


def _leading_coefficients() -> Optional[str]:
    for j in range(3):
        result = leading_coefficient_check(j)
        if not result.passed:
            return f"j={j}: {result.counterexample}"
    return None


def appendix_suite(order: int = 6, seed: Optional[int] = None) -> SuiteReport:
    """Poincaré polynomials of M̄_{0,n+1} and the polynomials A_j."""
    results = [
        _result("small-poincare", "P_3 = 1 + q^2, P_4 = 1 + 5q^2 + q^4", _small_poincare()),
        _result("betti-closed", "B_2 and B_4 closed forms", _betti_closed_forms(), 30),
        _result(
            "implicit-equation",
            "(1+y)^(q^2) = 1 + q^2 x + q^4 (y - x)",
            None if implicit_equation_check(order) else "see log",
            order,
        ),
        q_one_check(order),
        _result("a-polynomials", "A_0, A_2, A_4 recovered exactly", _a_polynomials()),
        _result("leading-coefficient", "leading coefficients of the B_2j polynomials", _leading_coefficients()),
    ]
    duality = palindromic_report(order + 6)
    results.append(duality.model_copy(update={"soft": True}))
    return SuiteReport(suite="appendix", order=order, seed=seed, results=results)


def _within(name: str, identity: str, value: float, target: float, tolerance: float) -> CheckResult:
    problem = None if abs(value - target) <= tolerance else f"{value!r} is not within {tolerance} of {target}"
    return _result(name, identity, problem)


def asym_suite(order: int = 6, seed: Optional[int] = None) -> SuiteReport:
    """Floating-point asymptotics; ``order`` is not used beyond the report."""
    r30, r60 = wp_ratio(30), wp_ratio(60)
    e30, e60 = euler_ratio(30), euler_ratio(60)
    euler_problem = None
    if abs(e60 - 1) > 0.05 or abs(e60 - 1) >= abs(e30 - 1):
        euler_problem = f"ratio {e30!r} at n=30, {e60!r} at n=60"
    results = [
        _within("gamma0", "first zero of J0", find_gamma0(), GAMMA0, 1e-9),
        _within("growth-constant", "C = 2 gamma0 J1(gamma0)", constant_C(), GROWTH_CONSTANT, 1e-8),
        _within("wp-ratio", "v_(n+3) C^n / (2n)! at n = 50", wp_ratio(50), WP_LIMIT, 1e-2),
        _within("wp-extrapolated", "Richardson step at n = 30, 60", richardson(r30, r60), WP_LIMIT, 1e-3),
        _result("euler-ratio", "Euler characteristic asymptotics", euler_problem),
        _within("betti-ratio", "B_2(n)/2^n at n = 40", betti_asymptotic_ratio(1, 40), 1.0, 1e-6),
    ]
    return SuiteReport(suite="asym", order=order, seed=seed, results=results)


SUITES: Dict[str, Callable[..., SuiteReport]] = {
    "pde": pde_suite,
    "inversion": inversion_suite,
    "laplace": laplace_suite,
    "omega": omega_suite,
    "appendix": appendix_suite,
    "asym": asym_suite,
}


def run_suite(name: str, order: int = 6, seed: Optional[int] = None) -> SuiteReport:
    """Run one suite by name, or every suite in turn for ``all``."""
    if name == "all":
        results: List[CheckResult] = []
        for suite in SUITE_NAMES:
            results.extend(run_suite(suite, order, seed).results)
        return SuiteReport(suite="all", order=order, seed=seed, results=results)
    if name not in SUITES:
        raise ValueError(f"Unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)} or all")
    logger.info(f"Running the {name} suite at order {order}")
    report = SUITES[name](order, seed)
    logger.info(f"{name}: {sum(r.passed for r in report.results)}/{len(report.results)} checks passed")
    return report
