from fractions import Fraction

import pytest

from cohft_algebra import CorrelatorProvider, CorrelatorRecord
from exact_core import MultiIndex, binomial, factorial, multi_indices_up_to
from shared.errors import CorrelatorMissingError, DimensionMismatchError, IntegralityError
from volumes import (
    KNOWN_INTEGRALS,
    VOLUME_TABLE_COLUMNS,
    VolumeCache,
    VolumeMethod,
    VolumeQuery,
    check_bessel_specialization,
    check_integral_of_F,
    check_linear_system,
    check_pde,
    check_zograf_ode,
    compute_volume,
    generating_F,
    intersection_integral,
    volume_closed,
    volume_recursive,
    volume_table,
    volume_via_inversion,
    zograf_closed,
    zograf_v,
)


@pytest.mark.parametrize("a", range(1, 9))
def test_single_index_volume(a):
    assert volume_recursive(MultiIndex.delta(a)) == Fraction(1, factorial(a))


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 6) for b in range(a, 6)])
def test_two_index_volume(a, b):
    m = MultiIndex.delta(a) + MultiIndex.delta(b)
    expected = Fraction(binomial(a + b + 2, a + 1) - 1, m.factorial * factorial(a + b))
    assert volume_recursive(m) == expected


def test_named_values():
    assert volume_recursive(MultiIndex.parse("1,1")) == Fraction(3, 2)
    assert volume_recursive(MultiIndex.parse("2,1")) == Fraction(161, 48)
    assert volume_recursive(MultiIndex.parse("0,0,1")) == Fraction(1, 6)


def test_empty_multi_index_has_volume_one():
    assert volume_recursive(MultiIndex()) == 1
    assert volume_closed(MultiIndex()) == 1


@pytest.mark.parametrize("text", sorted(KNOWN_INTEGRALS))
def test_known_integrals(text):
    assert intersection_integral(MultiIndex.parse(text)) == KNOWN_INTEGRALS[text]


def test_generating_function_coefficients():
    F = generating_F(5)
    assert F.coefficient_of(3, s1=3) == Fraction(61, 36)
    assert F.coefficient_of(4, s1=4) == Fraction(1379, 24 * 24)
    assert F.coefficient_of(5, s1=5) == Fraction(49946, 120 * 120)
    assert F.coefficient_of(2, s2=1) == Fraction(1, 2)
    assert F.coefficient_of(5, s1=1, s2=2) == Fraction(470, 2 * 120)


def test_pivot_does_not_matter():
    for m in multi_indices_up_to(6):
        default = volume_recursive(m)
        for a in m.indices():
            assert volume_recursive(m, pivot=a) == default, (m.to_text(), a)


def test_three_methods_agree_through_weight_six():
    inverted = volume_via_inversion(6)
    for m in multi_indices_up_to(6):
        assert volume_recursive(m) == volume_closed(m) == inverted[m], m.to_text()


def test_integrality_through_weight_six():
    for m in multi_indices_up_to(6):
        assert intersection_integral(m) >= 0


def test_non_integral_value_is_rejected():
    with pytest.raises(IntegralityError):
        intersection_integral(MultiIndex.delta(2), Fraction(1, 3))


def test_zograf_numbers():
    assert [zograf_v(n) for n in range(3, 9)] == [1, 1, 5, 61, 1379, 49946]
    for n in range(3, 15):
        assert zograf_closed(n) == zograf_v(n)
        assert zograf_v(n) == volume_recursive(MultiIndex.delta(1, n - 3)) * factorial(n - 3) ** 2
    with pytest.raises(ValueError):
        zograf_v(2)


def test_pde_holds():
    report = check_pde(5)
    assert report.passed
    assert report.first_failure() is None
    assert {r.equation.split("[")[0] for r in report.residuals} == {"flow", "antiderivative", "closed-form"}


def test_pde_detects_a_wrong_volume():
    wrong = volume_recursive(MultiIndex.delta(1, 2)) + 1
    report = check_pde(4, overrides={MultiIndex.delta(1, 2): wrong})
    assert not report.passed
    failure = report.first_failure()
    assert failure.equation == "flow[1]"
    assert failure.degree == 2


def test_zograf_ode():
    assert check_zograf_ode(8).passed
    broken = check_zograf_ode(8, overrides={6: Fraction(60)})
    assert not broken.passed
    assert broken.counterexample


def test_bessel_specialization():
    assert check_bessel_specialization(10)
    assert not check_bessel_specialization(10, overrides={7: Fraction(1378)})


def test_inversion_identities():
    assert check_linear_system(5).passed
    assert check_integral_of_F(5).passed


def test_compute_volume_all_methods():
    report = compute_volume(VolumeQuery(m=MultiIndex.parse("2,1"), method=VolumeMethod.ALL))
    assert report.values == {"recursive": "161/48", "closed": "161/48", "inversion": "161/48"}
    assert report.agreed
    assert report.integral == 161


def test_positive_genus_needs_the_closed_method():
    with pytest.raises(ValueError):
        compute_volume(VolumeQuery(m=MultiIndex.delta(1), genus=1, method=VolumeMethod.RECURSIVE))


def test_genus_one_from_a_table():
    provider = CorrelatorProvider.from_records([CorrelatorRecord(g=1, d=[0, 2], value="1/24")])
    report = compute_volume(VolumeQuery(m=MultiIndex.delta(1), genus=1, method=VolumeMethod.ALL), provider)
    assert report.values == {"closed": "1/24"}
    assert report.integral is None
    with pytest.raises(CorrelatorMissingError):
        volume_closed(MultiIndex.delta(2), provider, genus=1)


def test_genus_one_without_points_is_rejected():
    with pytest.raises(DimensionMismatchError):
        volume_closed(MultiIndex(), CorrelatorProvider.builtin(), genus=1)


def test_volume_table():
    frame = volume_table(3)
    assert list(frame.columns) == VOLUME_TABLE_COLUMNS
    assert len(frame) == 7
    row = frame[frame["m"] == "1,1"].iloc[0]
    assert row["value"] == "3/2"
    assert row["integral"] == 9


def test_cache_persists(tmp_path):
    cache = VolumeCache()
    volume_recursive(MultiIndex.parse("2,1"), cache=cache)
    assert MultiIndex.parse("2,1") in cache
    path = cache.dump(tmp_path)
    restored = VolumeCache()
    assert restored.load(path) == len(cache)
    assert dict(restored.items()) == dict(cache.items())
    assert path.read_bytes() == restored.dump(tmp_path / "again.json").read_bytes()
