"""Ratios of exact sequences to their predicted asymptotics.

Every exact input stays rational (or integral) until the final ratio, which is
assembled in floating point or through logarithms.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Literal, Optional

import pandas as pd
from pydantic import BaseModel

from exact_core import factorial, format_rational
from moduli_topology import betti, euler_characteristic
from shared.logger import get_logger
from volumes import zograf_v

from .bessel import constant_C

logger = get_logger(__name__)

RatioKind = Literal["wp", "euler"]

WP_LEADING_CONSTANT = 1.3620537
# printed with trailing dots; diagnostics only
WP_FIRST_CORRECTION = -0.131
WP_SECOND_CORRECTION = 0.019

WP_RANGE = (3, 80)
EULER_RANGE = (3, 120)


class RatioRow(BaseModel):
    n: int
    numerator: str
    denominator: str
    ratio: float
    extrapolated: Optional[float] = None


@lru_cache(maxsize=1)
def _growth_constant() -> float:
    return constant_C()


def _check_range(name: str, n: int, bounds: tuple) -> None:
    lo, hi = bounds
    if not lo <= n <= hi:
        raise ValueError(f"{name} needs {lo} <= n <= {hi}, got {n}")


def wp_exact(n: int) -> Fraction:
    """v_{n+3}/(2n)! as an exact rational."""
    return Fraction(zograf_v(n + 3), factorial(2 * n))


def wp_ratio(n: int) -> float:
    """v_{n+3}·Cⁿ/(2n)!, which tends to 1.3620537…."""
    _check_range("wp_ratio", n, WP_RANGE)
    return float(wp_exact(n)) * _growth_constant() ** n


def wp_predicted(n: int) -> float:
    """The three-term expansion in 1/n of the ratio."""
    return WP_LEADING_CONSTANT + WP_FIRST_CORRECTION / n + WP_SECOND_CORRECTION / n**2


def euler_ratio(n: int) -> float:
    """χ(M̄_{0,n+3})·√(n+2)·((e²−2e)/(n+2))^{n+3/2}, computed through logarithms."""
    _check_range("euler_ratio", n, EULER_RANGE)
    chi = euler_characteristic(n + 2)
    log_ratio = (
        math.log(chi)
        + 0.5 * math.log(n + 2)
        + (n + 1.5) * (math.log(math.e**2 - 2 * math.e) - math.log(n + 2))
    )
    return math.exp(log_ratio)


def betti_asymptotic_ratio(j: int, n: int) -> float:
    """B_{2j}(n)·j!/(j+1)^{n+j−1}."""
    if not 1 <= j <= 4:
        raise ValueError(f"betti_asymptotic_ratio needs 1 <= j <= 4, got {j}")
    if not 1 <= n <= 60:
        raise ValueError(f"betti_asymptotic_ratio needs 1 <= n <= 60, got {n}")
    return float(Fraction(betti(2 * j, n) * factorial(j), (j + 1) ** (n + j - 1)))


def richardson(ratio_n: float, ratio_2n: float) -> float:
    """One Richardson step in 1/n: 2·r(2n) − r(n)."""
    return 2 * ratio_2n - ratio_n


def ratio_rows(kind: RatioKind, ns: Iterable[int]) -> List[RatioRow]:
    """Raw and extrapolated ratios; the extrapolation is left empty when 2n is out of range."""
    if kind == "wp":
        ratio, bounds = wp_ratio, WP_RANGE
    elif kind == "euler":
        ratio, bounds = euler_ratio, EULER_RANGE
    else:
        raise ValueError(f"Unknown ratio kind {kind!r}")
    ns = list(ns)
    for n in ns:
        _check_range(f"{kind} ratio", n, bounds)
    rows = []
    for n in ns:
        if kind == "wp":
            exact = wp_exact(n)
            numerator, denominator = format_rational(exact.numerator), format_rational(exact.denominator)
        else:
            numerator, denominator = str(euler_characteristic(n + 2)), "1"
        value = ratio(n)
        extrapolated = richardson(value, ratio(2 * n)) if 2 * n <= bounds[1] else None
        if kind == "wp":
            logger.debug(f"n={n}: ratio {value:.10f}, three-term prediction {wp_predicted(n):.10f}")
        rows.append(RatioRow(n=n, numerator=numerator, denominator=denominator, ratio=value, extrapolated=extrapolated))
    return rows


def ratio_table(kind: RatioKind, ns: Iterable[int]) -> pd.DataFrame:
    rows = [row.model_dump() for row in ratio_rows(kind, ns)]
    return pd.DataFrame(rows, columns=list(RatioRow.model_fields))
