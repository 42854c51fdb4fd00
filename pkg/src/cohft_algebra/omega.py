"""The ω-algebra: tuple classes ω(a₁,…,a_p) versus monomials in the ω(a).

A tuple class expands into monomials by summing over permutations, one factor
ω(Σ_{j∈o} a_j) per cycle o. The inverse expansion sums over ordered set
partitions with weight (−1)^{p−k}/k!. Both are exposed here together with
the self-reproducing U-series identities used as property checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from exact_core import factorial, ordered_set_partitions
from shared.logger import get_logger

logger = get_logger(__name__)

Labels = Tuple[int, ...]


class OmegaBasis(str, Enum):
    MONOMIAL = "monomial"
    TUPLE = "tuple"


@dataclass(frozen=True)
class OmegaExpression:
    """Rational combination of ω-monomials or of tuple classes.

    Keys are sorted label tuples; in the monomial basis ``(1, 1, 2)`` stands
    for ω(1)²ω(2), in the tuple basis for ω(1,1,2).
    """

    terms: Mapping[Labels, Fraction] = field(default_factory=dict)
    basis: OmegaBasis = OmegaBasis.MONOMIAL

    def __post_init__(self) -> None:
        normalized: Dict[Labels, Fraction] = {}
        for key, value in self.terms.items():
            key = tuple(sorted(key))
            normalized[key] = normalized.get(key, Fraction(0)) + Fraction(value)
        object.__setattr__(self, "terms", {k: v for k, v in normalized.items() if v})

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def zero(cls, basis: OmegaBasis = OmegaBasis.MONOMIAL) -> "OmegaExpression":
        return cls({}, basis)

    @classmethod
    def single(cls, labels: Sequence[int], basis: OmegaBasis = OmegaBasis.MONOMIAL, coefficient: Fraction = Fraction(1)) -> "OmegaExpression":
        return cls({tuple(labels): coefficient}, basis)

    def _require_basis(self, other: "OmegaExpression") -> None:
        if self.basis != other.basis:
            raise ValueError(f"Cannot combine {self.basis.value} and {other.basis.value} expressions")

    def __add__(self, other: "OmegaExpression") -> "OmegaExpression":
        self._require_basis(other)
        merged = dict(self.terms)
        for key, value in other.terms.items():
            merged[key] = merged.get(key, Fraction(0)) + value
        return OmegaExpression(merged, self.basis)

    def __neg__(self) -> "OmegaExpression":
        return self.scale(-1)

    def __sub__(self, other: "OmegaExpression") -> "OmegaExpression":
        return self + (-other)

    def scale(self, factor: Fraction) -> "OmegaExpression":
        factor = Fraction(factor)
        return OmegaExpression({k: v * factor for k, v in self.terms.items()}, self.basis)

    def __mul__(self, other: "OmegaExpression") -> "OmegaExpression":
        """Product of monomial-basis expressions (tuple classes do not multiply freely)."""
        if self.basis is not OmegaBasis.MONOMIAL or other.basis is not OmegaBasis.MONOMIAL:
            raise ValueError("Only monomial-basis expressions can be multiplied")
        out: Dict[Labels, Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                key = tuple(sorted(k1 + k2))
                out[key] = out.get(key, Fraction(0)) + v1 * v2
        return OmegaExpression(out, OmegaBasis.MONOMIAL)

    def is_zero(self) -> bool:
        return not self.terms

    def first_term(self) -> Optional[Tuple[Labels, Fraction]]:
        if not self.terms:
            return None
        key = min(self.terms)
        return key, self.terms[key]

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key, value in sorted(self.terms.items()):
            if self.basis is OmegaBasis.TUPLE:
                body = f"ω({','.join(map(str, key))})" if key else "1"
            else:
                body = "".join(f"ω({a})" for a in key) or "1"
            if value == 1:
                text = body
            elif value == -1:
                text = f"-{body}"
            else:
                text = f"{value}*{body}"
            pieces.append(text)
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_text()


def _validate_labels(labels: Sequence[int], allow_zero_label: bool) -> Labels:
    if not labels:
        raise ValueError("Need at least one generator label")
    smallest = 0 if allow_zero_label else 1
    if any(a < smallest for a in labels):
        raise ValueError(f"Generator labels must be >= {smallest}, got {list(labels)}")
    return tuple(labels)


def _cycles(permutation: Sequence[int]) -> List[List[int]]:
    seen = [False] * len(permutation)
    cycles = []
    for start in range(len(permutation)):
        if seen[start]:
            continue
        cycle, j = [], start
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = permutation[j]
        cycles.append(cycle)
    return cycles


@lru_cache(maxsize=None)
def _cycle_expansion(labels: Labels) -> Dict[Labels, Fraction]:
    out: Dict[Labels, Fraction] = {}
    for permutation in itertools.permutations(range(len(labels))):
        key = tuple(sorted(sum(labels[j] for j in cycle) for cycle in _cycles(permutation)))
        out[key] = out.get(key, Fraction(0)) + 1
    return out


def tuple_to_monomials(labels: Sequence[int], allow_zero_label: bool = False) -> OmegaExpression:
    """Expand ω(a₁,…,a_p) as Σ_{σ∈S_p} ∏_{cycles o} ω(Σ_{j∈o} a_j)."""
    labels = _validate_labels(labels, allow_zero_label)
    return OmegaExpression(_cycle_expansion(tuple(sorted(labels))), OmegaBasis.MONOMIAL)


def tuple_to_monomials_recursive(labels: Sequence[int], allow_zero_label: bool = False) -> OmegaExpression:
    """Expand ω(a₁,…,a_p) by peeling off the last label.

    ω(a₁,…,a_p) = ω(a₁,…,a_{p−1})·ω(a_p) + Σ_{i<p} ω(a₁,…,a_i+a_p,…,a_{p−1}).
    """
    labels = _validate_labels(labels, allow_zero_label)
    if len(labels) == 1:
        return OmegaExpression.single(labels)
    head, last = labels[:-1], labels[-1]
    result = tuple_to_monomials_recursive(head, allow_zero_label) * OmegaExpression.single((last,))
    for i in range(len(head)):
        merged = head[:i] + (head[i] + last,) + head[i + 1 :]
        result = result + tuple_to_monomials_recursive(merged, allow_zero_label)
    return result


def _partition_weight(p: int, k: int) -> Fraction:
    return Fraction((-1) ** (p - k), factorial(k))


def monomials_to_tuples(labels: Sequence[int], allow_zero_label: bool = False) -> OmegaExpression:
    """Write the monomial ω(a₁)⋯ω(a_p) in tuple classes.

    Σ_{k=1}^{p} (−1)^{p−k}/k! Σ over ordered partitions of {1..p} into k
    nonempty blocks of ω(block sums).
    """
    labels = _validate_labels(labels, allow_zero_label)
    p = len(labels)
    out: Dict[Labels, Fraction] = {}
    for k in range(1, p + 1):
        weight = _partition_weight(p, k)
        for blocks in ordered_set_partitions(p, k):
            key = tuple(sorted(sum(labels[j] for j in block) for block in blocks))
            out[key] = out.get(key, Fraction(0)) + weight
    return OmegaExpression(out, OmegaBasis.TUPLE)


def expand_tuples(expression: OmegaExpression, allow_zero_label: bool = False) -> OmegaExpression:
    """Rewrite a tuple-basis expression in the monomial basis."""
    if expression.basis is not OmegaBasis.TUPLE:
        raise ValueError("expand_tuples needs a tuple-basis expression")
    result = OmegaExpression.zero(OmegaBasis.MONOMIAL)
    for key, value in expression.terms.items():
        result = result + tuple_to_monomials(key, allow_zero_label).scale(value)
    return result


def collect_tuples(expression: OmegaExpression, allow_zero_label: bool = False) -> OmegaExpression:
    """Rewrite a monomial-basis expression in tuple classes."""
    if expression.basis is not OmegaBasis.MONOMIAL:
        raise ValueError("collect_tuples needs a monomial-basis expression")
    result = OmegaExpression.zero(OmegaBasis.TUPLE)
    for key, value in expression.terms.items():
        result = result + monomials_to_tuples(key, allow_zero_label).scale(value)
    return result


def label_multisets(p: int, max_label: int, min_label: int = 1) -> Iterable[Labels]:
    return itertools.combinations_with_replacement(range(min_label, max_label + 1), p)


def roundtrip_counterexample(max_p: int = 4, max_label: int = 4) -> Optional[str]:
    """First monomial that fails monomial → tuples → monomial, or None."""
    for p in range(1, max_p + 1):
        for labels in label_multisets(p, max_label):
            back = expand_tuples(monomials_to_tuples(labels))
            if back != OmegaExpression.single(labels):
                return f"{OmegaExpression.single(labels)} came back as {back}"
    return None


def recursion_counterexample(max_p: int = 5, max_label: int = 3) -> Optional[str]:
    """First label tuple on which the recursive and cycle expansions differ, or None."""
    for p in range(1, max_p + 1):
        for labels in itertools.product(range(1, max_label + 1), repeat=p):
            if tuple_to_monomials_recursive(labels) != tuple_to_monomials(labels):
                return f"ω{labels}: recursive {tuple_to_monomials_recursive(labels)} vs cycles {tuple_to_monomials(labels)}"
    return None


# U-series over the tuple classes: polynomials in t_1..t_p with ω-coefficients

UPolynomial = Dict[Tuple[int, ...], OmegaExpression]


def _u_polynomial(blocks: Sequence[Sequence[int]], p: int, order: int) -> UPolynomial:
    """U(L₁,…,L_k) with L_j = Σ_{i∈block j} t_i, truncated at degree ``order`` in each tᵢ.

    For disjoint blocks the coefficient of ∏tᵢ^{eᵢ} is ω(a₁,…,a_k)/∏eᵢ! with
    a_j the total exponent of block j.
    """
    covered = [i for block in blocks for i in block]
    out: UPolynomial = {}
    for exponents in itertools.product(range(order + 1), repeat=len(covered)):
        e = [0] * p
        for i, power in zip(covered, exponents):
            e[i] = power
        labels = tuple(sum(e[i] for i in block) for block in blocks)
        denominator = 1
        for power in exponents:
            denominator *= factorial(power)
        out[tuple(e)] = tuple_to_monomials(labels, allow_zero_label=True).scale(Fraction(1, denominator))
    return out


def _u_add(left: UPolynomial, right: UPolynomial, factor: Fraction = Fraction(1)) -> UPolynomial:
    out = dict(left)
    for key, value in right.items():
        out[key] = out[key] + value.scale(factor) if key in out else value.scale(factor)
    return out


def _u_mul(left: UPolynomial, right: UPolynomial, order: int) -> UPolynomial:
    out: UPolynomial = {}
    for k1, v1 in left.items():
        for k2, v2 in right.items():
            key = tuple(a + b for a, b in zip(k1, k2))
            if max(key) > order:
                continue
            product = v1 * v2
            out[key] = out[key] + product if key in out else product
    return out


def _u_difference(left: UPolynomial, right: UPolynomial) -> Optional[str]:
    for key in sorted(set(left) | set(right)):
        a = left.get(key, OmegaExpression.zero())
        b = right.get(key, OmegaExpression.zero())
        if a != b:
            return f"coefficient of t^{list(key)}: {a} vs {b}"
    return None


def u_series_counterexample(p: int, order: int) -> Optional[str]:
    """First coefficient violating either U-series identity, or None.

    Checks U(t₁..t_p) = U(t₁..t_{p−1})U(t_p) + Σ_i U(t₁,..,tᵢ+t_p,..,t_{p−1})
    and ∏ U(t_j) = Σ_k (−1)^{p−k}/k! Σ_{ordered partitions} U(Σ_{S₁}t, …, Σ_{S_k}t).
    """
    if not 2 <= p <= 4:
        raise ValueError(f"u-series checks need 2 <= p <= 4, got {p}")
    if not 0 <= order <= 4:
        raise ValueError(f"u-series checks need 0 <= order <= 4, got {order}")

    singletons = [[i] for i in range(p)]
    full = _u_polynomial(singletons, p, order)
    rhs = _u_mul(_u_polynomial(singletons[:-1], p, order), _u_polynomial([[p - 1]], p, order), order)
    for i in range(p - 1):
        blocks = [[j] for j in range(p - 1) if j != i]
        blocks.insert(i, [i, p - 1])
        rhs = _u_add(rhs, _u_polynomial(blocks, p, order))
    problem = _u_difference(full, rhs)
    if problem:
        return f"peeling identity: {problem}"

    product = _u_polynomial([[0]], p, order)
    for j in range(1, p):
        product = _u_mul(product, _u_polynomial([[j]], p, order), order)
    expansion: UPolynomial = {}
    for k in range(1, p + 1):
        weight = _partition_weight(p, k)
        for partition in ordered_set_partitions(p, k):
            expansion = _u_add(expansion, _u_polynomial(partition, p, order), weight)
    problem = _u_difference(product, expansion)
    if problem:
        return f"product identity: {problem}"
    return None


def u_series_identity_check(p: int, order: int) -> bool:
    problem = u_series_counterexample(p, order)
    if problem:
        logger.warning(f"U-series identity fails for p={p}, order={order}: {problem}")
    return problem is None
