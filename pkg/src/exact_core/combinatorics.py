"""Multinomials, the kernel K and the index sets every volume formula sums over."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from typing import Iterator, List, Sequence, Tuple

from .factorials import factorial
from .multi_index import MultiIndex

Composition = Tuple[MultiIndex, ...]


def multinomial(n: int, parts: Sequence[int]) -> int:
    """Return n! / ∏ parts_i!.

    Raises:
        ValueError: If the parts do not add up to ``n`` or one of them is negative.
    """
    if any(p < 0 for p in parts):
        raise ValueError(f"Negative part in {list(parts)}")
    if sum(parts) != n:
        raise ValueError(f"Parts {list(parts)} do not sum to {n}")
    return factorial(n) // prod(factorial(p) for p in parts)


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def kernel_K(ns: Sequence[int]) -> Fraction:
    """Return 1 / (n₁ (n₁+n₂) ⋯ (n₁+⋯+n_a)).

    Raises:
        ValueError: On an empty sequence or a nonpositive entry.
    """
    if not ns:
        raise ValueError("kernel_K needs a nonempty sequence")
    if any(n < 1 for n in ns):
        raise ValueError(f"kernel_K entries must be positive, got {list(ns)}")
    return Fraction(1, prod(itertools.accumulate(ns)))


def _weak_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All ordered ``parts``-tuples of nonnegative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _compositions(target: MultiIndex, k: int, allow_zero: bool) -> Tuple[Composition, ...]:
    per_index = [
        [(a, split) for split in _weak_compositions(count, k)] for a, count in target.entries
    ]
    found: List[Composition] = []
    for choice in itertools.product(*per_index):
        parts = tuple(
            MultiIndex(tuple((a, split[i]) for a, split in choice if split[i]))
            for i in range(k)
        )
        if not allow_zero and not all(parts):
            continue
        found.append(parts)
    found.sort()
    return tuple(found)


@dataclass(frozen=True)
class CompositionStream:
    """Ordered decompositions ``target = m₁ + ⋯ + m_k``.

    Each decomposition is produced exactly once, in lexicographic order of
    ``(m₁, m₂, ...)`` under the canonical ordering of ``MultiIndex``.
    """

    target: MultiIndex
    parts: int
    allow_zero_parts: bool

    def __post_init__(self) -> None:
        if self.parts < 1:
            raise ValueError(f"Number of parts must be positive, got {self.parts}")

    def __iter__(self) -> Iterator[Composition]:
        return iter(_compositions(self.target, self.parts, self.allow_zero_parts))

    def __len__(self) -> int:
        return len(_compositions(self.target, self.parts, self.allow_zero_parts))


def enumerate_compositions(target: MultiIndex, k: int, allow_zero: bool) -> CompositionStream:
    """Enumerate ordered k-part decompositions of ``target``."""
    return CompositionStream(target=target, parts=k, allow_zero_parts=allow_zero)


def ordered_set_partitions(p: int, k: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Ordered partitions of ``{0, ..., p-1}`` into ``k`` nonempty blocks.

    A set is a multi-index with every multiplicity equal to one, so this is a
    composition stream over δ₁ + ⋯ + δ_p without zero parts.
    """
    labels = MultiIndex(tuple((a, 1) for a in range(1, p + 1)))
    for parts in enumerate_compositions(labels, k, allow_zero=False):
        yield tuple(tuple(a - 1 for a in part.indices()) for part in parts)


def integer_compositions(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Ordered ``k``-tuples of positive integers summing to ``n``."""
    if k <= 0 or n < k:
        return
    for cuts in itertools.combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(k))


@lru_cache(maxsize=None)
def multi_indices_of_weight(w: int) -> Tuple[MultiIndex, ...]:
    """Every multi-index of weight ``w`` (the partitions of ``w``), in canonical order."""
    if w == 0:
        return (MultiIndex(),)

    def partitions(rest: int, largest: int) -> Iterator[List[int]]:
        if rest == 0:
            yield []
            return
        for part in range(min(rest, largest), 0, -1):
            for tail in partitions(rest - part, part):
                yield [part] + tail

    found = []
    for parts in partitions(w, w):
        counts: dict = {}
        for part in parts:
            counts[part] = counts.get(part, 0) + 1
        found.append(MultiIndex.from_mapping(counts))
    return tuple(sorted(found))


def multi_indices_up_to(max_weight: int) -> Iterator[MultiIndex]:
    """Every multi-index with ``|m| <= max_weight``, by increasing weight."""
    for w in range(max_weight + 1):
        yield from multi_indices_of_weight(w)
