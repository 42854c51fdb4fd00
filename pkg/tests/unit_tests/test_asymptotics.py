from fractions import Fraction

import pytest
from scipy import special

from asymptotics import (
    WP_LEADING_CONSTANT,
    RatioRow,
    bessel_j,
    betti_asymptotic_ratio,
    constant_C,
    euler_ratio,
    find_gamma0,
    ratio_rows,
    ratio_table,
    richardson,
    wp_exact,
    wp_predicted,
    wp_ratio,
)


@pytest.mark.parametrize("x", [0.0, 0.5, 1.0, 2.404, 3.7, 10.0, -4.2])
def test_bessel_series_matches_scipy(x):
    assert bessel_j(0, x) == pytest.approx(special.j0(x), abs=1e-14)
    assert bessel_j(1, x) == pytest.approx(special.j1(x), abs=1e-14)


def test_bessel_arguments():
    with pytest.raises(ValueError):
        bessel_j(2, 1.0)
    with pytest.raises(ValueError):
        bessel_j(0, 51.0)


@pytest.mark.parametrize("method", ["brentq", "newton", "bisect"])
def test_first_zero(method):
    reference = special.jn_zeros(0, 1)[0]
    assert find_gamma0(method) == pytest.approx(reference, abs=1e-9)
    assert abs(find_gamma0(method) - 2.4048255577) < 1e-9


def test_unknown_root_method():
    with pytest.raises(ValueError):
        find_gamma0("secant")


def test_growth_constant():
    assert abs(constant_C() - 2.496918339) < 1e-8
    gamma0 = special.jn_zeros(0, 1)[0]
    assert constant_C() == pytest.approx(2 * gamma0 * special.j1(gamma0), abs=1e-12)


def test_wp_ratio_converges():
    assert abs(wp_ratio(50) - WP_LEADING_CONSTANT) < 1e-2
    assert abs(richardson(wp_ratio(30), wp_ratio(60)) - WP_LEADING_CONSTANT) < 1e-3
    assert wp_ratio(40) == pytest.approx(wp_predicted(40), abs=1e-3)


def test_wp_exact_is_rational():
    # v₆/6!
    assert wp_exact(3) == Fraction(61, 720)


def test_ratio_ranges():
    with pytest.raises(ValueError):
        wp_ratio(2)
    with pytest.raises(ValueError):
        euler_ratio(121)
    with pytest.raises(ValueError):
        betti_asymptotic_ratio(5, 10)


def test_euler_ratio_approaches_one():
    r30, r60 = euler_ratio(30), euler_ratio(60)
    assert abs(r60 - 1) < 0.05
    assert abs(r60 - 1) < abs(r30 - 1)


def test_betti_ratio():
    assert abs(betti_asymptotic_ratio(1, 40) - 1) < 1e-6


def test_ratio_rows():
    rows = ratio_rows("wp", [10, 30])
    assert all(isinstance(row, RatioRow) for row in rows)
    assert rows[0].extrapolated is not None
    assert rows[1].extrapolated is not None
    assert ratio_rows("wp", [50])[0].extrapolated is None
    with pytest.raises(ValueError):
        ratio_rows("zograf", [10])


def test_ratio_table_columns():
    frame = ratio_table("euler", [5, 6])
    assert list(frame.columns) == ["n", "numerator", "denominator", "ratio", "extrapolated"]
    assert frame.iloc[0]["denominator"] == "1"
