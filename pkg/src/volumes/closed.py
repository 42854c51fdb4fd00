"""Volumes as alternating sums of ψ-class correlators."""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Optional

from cohft_algebra import CorrelatorProvider, kappa_integral
from exact_core import MultiIndex, enumerate_compositions, factorial
from shared.errors import DimensionMismatchError

_BUILTIN = CorrelatorProvider.builtin()


def volume_closed(m: MultiIndex, provider: Optional[CorrelatorProvider] = None, genus: int = 0) -> Fraction:
    """Return V_g(m) through the correlators of the provider.

    V_g(m) = 1/|m|! · Σ_{k=1}^{p} (−1)^{p−k}/k! · Σ ⟨τ₀ⁿ τ_{|m₁|+1} ⋯ τ_{|m_k|+1}⟩ / (m₁!⋯m_k!)

    with p = ‖m‖, n = |m| + 3 − 3g, over ordered decompositions m = m₁+⋯+m_k
    into nonzero parts.

    Raises:
        CorrelatorMissingError: If a table provider lacks one of the correlators.
        DimensionMismatchError: If no stable moduli space carries the integral.
    """
    provider = provider or _BUILTIN
    n = m.weight + 3 - 3 * genus
    if not m:
        if genus == 0:
            return Fraction(1)
        raise DimensionMismatchError(f"V_{genus}(0) is not a top-degree integral")
    if n < 0:
        raise DimensionMismatchError(f"|m| = {m.weight} is too small for genus {genus}")
    p = m.norm
    total = Fraction(0)
    for k in range(1, p + 1):
        inner = Fraction(0)
        for parts in enumerate_compositions(m, k, allow_zero=False):
            inner += kappa_integral(n, [part.weight for part in parts], provider, genus) / prod(
                part.factorial for part in parts
            )
        total += Fraction((-1) ** (p - k), factorial(k)) * inner
    return total / factorial(m.weight)
