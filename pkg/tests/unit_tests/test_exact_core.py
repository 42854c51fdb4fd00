import itertools
from fractions import Fraction
from math import prod

import pytest

from exact_core import (
    FactorialTable,
    MultiIndex,
    binomial,
    enumerate_compositions,
    factorial,
    format_rational,
    integer_compositions,
    kernel_K,
    multi_indices_of_weight,
    multi_indices_up_to,
    multinomial,
    ordered_set_partitions,
    parse_rational,
)
from shared.errors import MultiIndexParseError


def test_parse_text_form():
    m = MultiIndex.parse("2,1")
    assert m == MultiIndex.delta(1, 2) + MultiIndex.delta(2)
    assert m.weight == 4
    assert m.norm == 3
    assert m.factorial == 2


def test_trailing_zeros_do_not_change_the_key():
    assert MultiIndex.parse("0,0,1,0,0") == MultiIndex.parse("0,0,1")
    assert MultiIndex.parse("0,0,1").to_text() == "0,0,1"
    assert MultiIndex.parse("0").to_text() == "0"


@pytest.mark.parametrize("text", ["", "1,,2", "a", "1,-1", "1.5"])
def test_parse_rejects_bad_text(text):
    with pytest.raises(MultiIndexParseError):
        MultiIndex.parse(text)


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        MultiIndex.parse("x")


def test_subtraction_below_zero_fails():
    with pytest.raises(ValueError):
        MultiIndex.delta(1) - MultiIndex.delta(2)


def test_dense_pads_to_length():
    assert MultiIndex.delta(2).dense(4) == (0, 1, 0, 0)


def test_factorials_are_cached_and_exact():
    table = FactorialTable(bound=10)
    assert table(10) == 3628800
    assert table(12) == 479001600
    assert factorial(0) == 1
    with pytest.raises(ValueError):
        factorial(-1)


def test_multinomial_and_binomial():
    assert multinomial(4, [2, 1, 1]) == 12
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    with pytest.raises(ValueError):
        multinomial(4, [2, 1])


def test_kernel_K():
    assert kernel_K([2]) == Fraction(1, 2)
    assert kernel_K([2, 1, 3]) == Fraction(1, 2 * 3 * 6)
    with pytest.raises(ValueError):
        kernel_K([])
    with pytest.raises(ValueError):
        kernel_K([1, 0])


def test_compositions_are_unique_and_cover_the_target():
    target = MultiIndex.parse("2,1")
    parts = list(enumerate_compositions(target, 3, allow_zero=True))
    assert len(parts) == len(set(parts))
    # C(4,2) ways for m(1) = 2 times 3 ways for m(2) = 1
    assert len(parts) == 18
    for composition in parts:
        total = MultiIndex()
        for p in composition:
            total = total + p
        assert total == target


def test_compositions_without_zero_parts():
    parts = list(enumerate_compositions(MultiIndex.delta(1, 3), 2, allow_zero=False))
    assert [(a.weight, b.weight) for a, b in parts] == [(1, 2), (2, 1)]


def test_ordered_set_partitions_count():
    # ordered Bell numbers / surjections: 3 elements into 2 ordered blocks
    assert len(list(ordered_set_partitions(3, 2))) == 6
    assert len(list(ordered_set_partitions(4, 4))) == 24


def test_integer_compositions():
    assert list(integer_compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(integer_compositions(2, 3)) == []


def test_multi_indices_of_weight_are_partitions():
    assert [len(multi_indices_of_weight(w)) for w in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert sum(1 for _ in multi_indices_up_to(7)) == 45


def test_rational_text_form():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-4, 2)) == "-2"
    assert parse_rational("161/48") == Fraction(161, 48)
    with pytest.raises(ValueError):
        parse_rational("0.5")


@pytest.mark.parametrize("k", range(1, 6))
def test_zero_parts_count_by_inclusion(k):
    for m in multi_indices_up_to(5):
        with_zeros = len(enumerate_compositions(m, k, allow_zero=True))
        # choose which j of the k positions carry a nonzero part
        expected = 0 if m else 1
        expected += sum(binomial(k, j) * len(enumerate_compositions(m, j, allow_zero=False)) for j in range(1, k + 1))
        assert with_zeros == expected, (m.to_text(), k)


def test_kernel_K_telescopes():
    for length in range(2, 5):
        for ns in itertools.product(range(1, 5), repeat=length):
            assert kernel_K(ns) * sum(ns) == kernel_K(ns[:-1]), ns


def test_multiplicity_quotient_is_a_positive_integer():
    for m in multi_indices_up_to(5):
        for k in range(1, 5):
            for parts in enumerate_compositions(m, k, allow_zero=True):
                quotient = Fraction(m.factorial, prod(p.factorial for p in parts))
                assert quotient.denominator == 1 and quotient > 0, (m.to_text(), parts)
