"""J₀, J₁ by their ascending series, the first zero γ₀ of J₀ and C = 2γ₀J₁(γ₀)."""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional

from scipy.optimize import bisect, brentq, newton

from exact_core import factorial
from shared.logger import get_logger

logger = get_logger(__name__)

RootMethod = Literal["brentq", "newton", "bisect"]

MAX_ARGUMENT = 50.0
TERM_TOLERANCE = Fraction(1, 10**20)
GAMMA0_BRACKET = (2.0, 3.0)


def bessel_j(nu: int, x: float) -> float:
    """Jν(x) for ν ∈ {0, 1}, summing Σ (−1)^k (x/2)^{2k+ν}/(k!(k+ν)!) exactly.

    The terms are accumulated as rationals (the float argument is exact as a
    Fraction) and rounded once at the end.

    Raises:
        ValueError: If ν ∉ {0, 1} or |x| > 50.
    """
    if nu not in (0, 1):
        raise ValueError(f"bessel_j supports nu = 0 or 1, got {nu}")
    if abs(x) > MAX_ARGUMENT:
        raise ValueError(f"bessel_j needs |x| <= {MAX_ARGUMENT}, got {x}")
    half = Fraction(x) / 2
    square = half * half
    term = half**nu / factorial(nu)
    total = Fraction(0)
    k = 0
    while True:
        total += term
        k += 1
        term = -term * square / (k * (k + nu))
        if k > abs(half) and abs(term) < TERM_TOLERANCE:
            return float(total)


def _j0(x: float) -> float:
    return bessel_j(0, x)


def _j0_prime(x: float) -> float:
    return -bessel_j(1, x)


def find_gamma0(method: RootMethod = "brentq", start: Optional[float] = None) -> float:
    """Smallest positive zero of J₀.

    ``brentq`` brackets on [2, 3] and polishes with Newton (J₀′ = −J₁);
    ``newton`` starts from ``start`` (2.5 by default); ``bisect`` only bisects.
    """
    lo, hi = GAMMA0_BRACKET
    if method == "brentq":
        root = brentq(_j0, lo, hi, xtol=1e-15)
        root = newton(_j0, root, fprime=_j0_prime, tol=1e-15, maxiter=20)
    elif method == "newton":
        root = newton(_j0, 2.5 if start is None else start, fprime=_j0_prime, tol=1e-15, maxiter=50)
    elif method == "bisect":
        root = bisect(_j0, lo, hi, xtol=1e-14)
    else:
        raise ValueError(f"Unknown root-finding method {method!r}")
    logger.debug(f"gamma0 by {method}: {root!r}")
    return float(root)


def constant_C(method: RootMethod = "brentq", start: Optional[float] = None) -> float:
    """C = 2γ₀J₁(γ₀) = 2γ₀|J₀′(γ₀)|, the growth constant of Zograf's numbers."""
    gamma0 = find_gamma0(method, start)
    return 2 * gamma0 * bessel_j(1, gamma0)
