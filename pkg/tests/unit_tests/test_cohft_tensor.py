import random
from fractions import Fraction

import pytest

from cohft_tensor import (
    CohftRecord,
    PotentialCoeffs,
    SCoords,
    UCoeffs,
    b_to_c,
    b_to_s,
    c_to_b,
    decode_coords,
    encode_coords,
    explicit_b_from_c,
    explicit_c_from_b,
    explicit_tensor_laws,
    laplace_identity_check,
    potential_from_s,
    random_potential,
    random_s,
    read_coords,
    s_to_b,
    tensor_product,
)
from exact_core import MultiIndex
from shared.errors import NormalizationError, OrderMismatchError
from volumes import inverse_x_series, volume_recursive

SEED = 1234


def test_normalization_is_enforced():
    with pytest.raises(NormalizationError):
        PotentialCoeffs(5, {3: Fraction(2)})
    with pytest.raises(NormalizationError):
        UCoeffs(2, {0: Fraction(3)})
    assert PotentialCoeffs.trivial(6)[6] == 0


def test_trivial_theory_is_the_tensor_unit():
    rng = random.Random(SEED)
    theory = random_potential(rng, 7)
    assert tensor_product(theory, PotentialCoeffs.trivial(7)) == theory


def test_conversions_shift_the_order_by_three():
    theory = PotentialCoeffs(6, {4: Fraction(1, 2), 6: Fraction(-3)})
    assert c_to_b(theory).order == 3
    assert b_to_s(c_to_b(theory)).order == 3


def test_c4_is_minus_b1():
    # Φ″ = x + C₄x²/2 + ⋯ is inverted by y − C₄y²/2 + ⋯
    theory = PotentialCoeffs(4, {4: Fraction(5, 7)})
    assert c_to_b(theory)[1] == Fraction(-5, 7)


def test_coordinate_roundtrips():
    rng = random.Random(SEED)
    for order in range(3, 9):
        theory = random_potential(rng, order)
        B = c_to_b(theory)
        assert b_to_c(B) == theory
        assert s_to_b(b_to_s(B)) == B


def test_explicit_sums_match_reversion():
    rng = random.Random(SEED + 1)
    for order in (5, 7, 9):
        theory = random_potential(rng, order)
        assert explicit_b_from_c(theory) == c_to_b(theory)
        B = c_to_b(theory)
        assert explicit_c_from_b(B) == theory


def test_tensor_laws_on_random_theories():
    rng = random.Random(SEED)
    for _ in range(10):
        left, right = random_potential(rng, 7), random_potential(rng, 7)
        product = tensor_product(left, right)
        for n, expected in explicit_tensor_laws(left, right).items():
            assert product[n] == expected, n


def test_tensor_is_commutative():
    rng = random.Random(SEED + 2)
    a, b = random_potential(rng, 8), random_potential(rng, 8)
    assert tensor_product(a, b) == tensor_product(b, a)


def test_tensor_is_associative():
    rng = random.Random(SEED + 5)
    for order in range(4, 9):
        a, b, c = (random_potential(rng, order) for _ in range(3))
        assert tensor_product(tensor_product(a, b), c) == tensor_product(a, tensor_product(b, c)), order


def test_tensor_orders_must_match():
    with pytest.raises(OrderMismatchError):
        tensor_product(PotentialCoeffs.trivial(5), PotentialCoeffs.trivial(6))


def test_canonical_coordinates_add():
    rng = random.Random(SEED + 3)
    for _ in range(5):
        s1, s2 = random_s(rng, 4), random_s(rng, 4)
        assert potential_from_s(s1 + s2, 7) == tensor_product(potential_from_s(s1, 7), potential_from_s(s2, 7))


def test_potential_from_s_matches_the_u_series():
    rng = random.Random(SEED + 4)
    s = random_s(rng, 5)
    assert potential_from_s(s, 8) == b_to_c(s_to_b(s))


def test_potential_from_s_reads_volumes():
    s = SCoords(2, {1: Fraction(1)})
    # C₅ = 2!·V(2δ₁)
    assert potential_from_s(s, 5)[5] == 2 * volume_recursive(MultiIndex.delta(1, 2))


def test_potential_from_s_needs_enough_coordinates():
    with pytest.raises(OrderMismatchError):
        potential_from_s(SCoords(2), 6)
    with pytest.raises(OrderMismatchError):
        SCoords(2) + SCoords(3)


def test_laplace_identity():
    assert laplace_identity_check(6)


def test_laplace_identity_detects_a_change():
    x = inverse_x_series(4)
    broken = x + x.like({(3, (0, 1, 0, 0)): 1})
    assert not laplace_identity_check(4, broken)


def test_json_coordinates(tmp_path):
    theory = PotentialCoeffs(6, {4: Fraction(1, 2), 5: Fraction(-2)})
    data = encode_coords(theory)
    assert data == b'{"order":6,"coords":"C","values":["1","1/2","-2","0"]}'
    assert decode_coords(data) == theory
    path = tmp_path / "theory.json"
    path.write_bytes(encode_coords(b_to_s(c_to_b(theory))))
    assert isinstance(read_coords(path), SCoords)


def test_json_length_must_match_order():
    with pytest.raises(OrderMismatchError):
        decode_coords(b'{"order":5,"coords":"C","values":["1","0"]}')
    assert isinstance(CohftRecord(order=0, coords="B", values=["1"]), CohftRecord)
