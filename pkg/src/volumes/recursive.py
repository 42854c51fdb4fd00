"""Genus-zero volumes from the pivot recursion, and Zograf's numbers vₙ."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Optional

from exact_core import (
    MultiIndex,
    binomial,
    enumerate_compositions,
    factorial,
    integer_compositions,
    kernel_K,
    multinomial,
)
from shared.errors import IntegralityError
from shared.logger import get_logger

from .cache import VOLUME_CACHE, VolumeCache

logger = get_logger(__name__)


def _reduce_at(m: MultiIndex, a: int, cache: VolumeCache) -> Fraction:
    """Evaluate V(m) by removing one δ_a.

    V(m) = (|m'|+a+1)/m(a) · Σ K(|m₁|+2, |m₂|+1, …, |m_a|+1) · V(m₁)⋯V(m_{a+1})
    over ordered decompositions m' = m₁+⋯+m_{a+1} with zero parts allowed,
    where m' = m − δ_a.
    """
    count = m.multiplicity(a)
    if not count:
        raise ValueError(f"Pivot {a} does not occur in {m}")
    rest = m - MultiIndex.delta(a)
    total = Fraction(0)
    for parts in enumerate_compositions(rest, a + 1, allow_zero=True):
        ns = [parts[0].weight + 2] + [p.weight + 1 for p in parts[1:a]]
        total += kernel_K(ns) * prod((volume_recursive(p, cache=cache) for p in parts), start=Fraction(1))
    return Fraction(rest.weight + a + 1, count) * total


def volume_recursive(m: MultiIndex, pivot: Optional[int] = None, cache: VolumeCache = VOLUME_CACHE) -> Fraction:
    """Return V(m) by the recursion reducing at the smallest index present.

    Args:
        m: The multi-index.
        pivot: Reduce at this index instead; the result must not depend on it.
            Sub-volumes always use the default pivot.
        cache: Memo table shared by every method.
    """
    if not m:
        return Fraction(1)
    if pivot is not None:
        return _reduce_at(m, pivot, cache)
    cached = cache.get(m)
    if cached is not None:
        return cached
    value = _reduce_at(m, m.indices()[0], cache)
    logger.debug(f"V({m.to_text()}) = {value}")
    return cache.put(m, value)


@lru_cache(maxsize=None)
def _zograf(n: int) -> Fraction:
    if n == 3:
        return Fraction(1)
    total = Fraction(0)
    for i in range(1, n - 2):
        total += (
            Fraction(i * (n - i - 2), n - 1)
            * binomial(n - 4, i - 1)
            * binomial(n, i + 1)
            * _zograf(i + 2)
            * _zograf(n - i)
        )
    return total / 2


def zograf_v(n: int) -> Fraction:
    """Return Zograf's vₙ from his quadratic recursion (v₃ = 1).

    Raises:
        ValueError: If n < 3.
    """
    if n < 3:
        raise ValueError(f"zograf_v needs n >= 3, got {n}")
    # fill bottom-up so the memo never recurses deeply
    for k in range(3, n):
        _zograf(k)
    return _zograf(n)


def zograf_closed(n: int) -> Fraction:
    """Return vₙ from the alternating sum over compositions of n−3.

    vₙ = Σ_k (−1)^{n−3−k}/k! Σ_{m₁+⋯+m_k=n−3, mᵢ>0} (n−3; m)·(n−3+k; m+1).
    """
    if n < 3:
        raise ValueError(f"zograf_closed needs n >= 3, got {n}")
    if n == 3:
        return Fraction(1)
    w = n - 3
    total = Fraction(0)
    for k in range(1, w + 1):
        inner = sum(
            multinomial(w, parts) * multinomial(w + k, [p + 1 for p in parts])
            for parts in integer_compositions(w, k)
        )
        total += Fraction((-1) ** (w - k) * inner, factorial(k))
    return total


def intersection_integral(m: MultiIndex, value: Optional[Fraction] = None) -> int:
    """Return ∫ω^m = V(m)·|m|!·m!, which must be a nonnegative integer.

    Raises:
        IntegralityError: If the product is not a nonnegative integer.
    """
    volume = volume_recursive(m) if value is None else value
    scaled = volume * factorial(m.weight) * m.factorial
    if scaled.denominator != 1 or scaled < 0:
        raise IntegralityError(f"∫ω^m for m = {m.to_text()} is {scaled}, not a nonnegative integer")
    return scaled.numerator
