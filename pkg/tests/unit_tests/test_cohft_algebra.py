import itertools
import random
from fractions import Fraction

import pytest

from cohft_algebra import (
    CorrelatorProvider,
    OmegaBasis,
    OmegaExpression,
    collect_tuples,
    correlator,
    expand_tuples,
    kappa_integral,
    monomials_to_tuples,
    recursion_counterexample,
    roundtrip_counterexample,
    tuple_to_monomials,
    tuple_to_monomials_recursive,
    u_series_counterexample,
    u_series_identity_check,
)
from cohft_algebra import omega as omega_module
from exact_core import factorial
from shared.errors import CorrelatorMissingError, DimensionMismatchError

BUILTIN = CorrelatorProvider.builtin()


def test_genus_zero_correlators_are_multinomials():
    assert correlator(BUILTIN, [0, 0, 0]) == 1
    assert correlator(BUILTIN, [0, 0, 0, 1]) == 1
    assert correlator(BUILTIN, [0, 0, 0, 0, 1, 1]) == 2
    assert correlator(BUILTIN, [0, 0, 0, 0, 0, 3, 1]) == 4


def test_correlator_off_dimension_is_zero():
    assert correlator(BUILTIN, [0, 0, 0, 2]) == 0


def test_unstable_correlator_raises():
    with pytest.raises(DimensionMismatchError):
        correlator(BUILTIN, [0, 0])


def test_kappa_integral_dimension():
    assert kappa_integral(4, [1], BUILTIN) == 1
    with pytest.raises(DimensionMismatchError):
        kappa_integral(4, [2], BUILTIN)


def test_table_provider(tmp_path):
    path = tmp_path / "correlators.jsonl"
    path.write_text('{"g": 1, "d": [1], "value": "1/24"}\n\n{"g": 1, "d": [2, 0], "value": "1/24"}\n')
    provider = CorrelatorProvider.from_jsonl(path)
    assert provider.genus == 1
    assert correlator(provider, [1]) == Fraction(1, 24)
    assert correlator(provider, [0, 2]) == Fraction(1, 24)
    with pytest.raises(CorrelatorMissingError) as excinfo:
        correlator(provider, [0, 0, 3])
    assert excinfo.value.genus == 1
    assert excinfo.value.exponents == (0, 0, 3)


def test_builtin_provider_knows_only_genus_zero():
    with pytest.raises(CorrelatorMissingError):
        correlator(BUILTIN, [1], genus=1)


def test_two_label_expansion():
    assert tuple_to_monomials((1, 2)).to_text() == "ω(1)ω(2) + ω(3)"
    assert monomials_to_tuples((1, 2)).to_text() == "ω(1,2) - ω(3)"


def test_three_label_expansion():
    assert tuple_to_monomials((1, 2, 4)) == OmegaExpression(
        {(1, 2, 4): 1, (3, 4): 1, (2, 5): 1, (1, 6): 1, (7,): 2}
    )
    assert monomials_to_tuples((1, 2, 4)) == OmegaExpression(
        {(1, 2, 4): 1, (3, 4): -1, (2, 5): -1, (1, 6): -1, (7,): 1}, OmegaBasis.TUPLE
    )


def test_cycle_expansion_has_p_factorial_terms():
    for p in range(1, 6):
        expansion = tuple_to_monomials((1,) * p)
        assert sum(expansion.terms.values()) == factorial(p)


@pytest.mark.parametrize("p", range(1, 5))
def test_expansion_is_symmetric_in_the_labels(p):
    for labels in itertools.combinations_with_replacement(range(1, 4), p):
        expected = tuple_to_monomials(labels)
        for permuted in set(itertools.permutations(labels)):
            assert tuple_to_monomials(permuted) == expected, permuted
            assert tuple_to_monomials_recursive(permuted) == expected, permuted


def test_recursive_and_cycle_expansions_agree():
    assert recursion_counterexample(max_p=5, max_label=3) is None


def test_roundtrip_both_ways():
    assert roundtrip_counterexample(max_p=4, max_label=4) is None
    rng = random.Random(7)
    for _ in range(20):
        labels = tuple(rng.randint(1, 5) for _ in range(rng.randint(1, 4)))
        tuples = OmegaExpression.single(labels, OmegaBasis.TUPLE)
        assert collect_tuples(expand_tuples(tuples)) == tuples


def test_labels_are_validated():
    with pytest.raises(ValueError):
        tuple_to_monomials(())
    with pytest.raises(ValueError):
        tuple_to_monomials((0, 1))
    assert tuple_to_monomials((0, 1), allow_zero_label=True).terms == {(0, 1): 1, (1,): 1}


def test_bases_do_not_mix():
    with pytest.raises(ValueError):
        OmegaExpression.single((1,)) + OmegaExpression.single((1,), OmegaBasis.TUPLE)
    with pytest.raises(ValueError):
        expand_tuples(OmegaExpression.single((1,)))


@pytest.mark.parametrize("p", [2, 3])
def test_u_series_identities(p):
    assert u_series_identity_check(p, 2)


def test_u_series_range():
    with pytest.raises(ValueError):
        u_series_counterexample(5, 2)


def test_sign_mutation_is_caught(monkeypatch):
    monkeypatch.setattr(omega_module, "_partition_weight", lambda p, k: Fraction((-1) ** (p - k + 1), factorial(k)) if k < p else Fraction(1, factorial(k)))
    problem = roundtrip_counterexample(max_p=3, max_label=2)
    assert problem is not None
    assert "ω(1)ω(1)" in problem


def test_recursive_expansion_matches_on_zero_labels():
    labels = (0, 2, 1)
    assert tuple_to_monomials_recursive(labels, allow_zero_label=True) == tuple_to_monomials(labels, allow_zero_label=True)
