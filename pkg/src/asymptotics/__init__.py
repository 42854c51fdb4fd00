"""Floating-point checks of the asymptotic growth of the exact sequences."""

from .bessel import bessel_j, constant_C, find_gamma0
from .ratios import (
    WP_LEADING_CONSTANT,
    RatioRow,
    betti_asymptotic_ratio,
    euler_ratio,
    ratio_rows,
    ratio_table,
    richardson,
    wp_exact,
    wp_predicted,
    wp_ratio,
)

__all__ = [
    "RatioRow",
    "WP_LEADING_CONSTANT",
    "bessel_j",
    "betti_asymptotic_ratio",
    "constant_C",
    "euler_ratio",
    "find_gamma0",
    "ratio_rows",
    "ratio_table",
    "richardson",
    "wp_exact",
    "wp_predicted",
    "wp_ratio",
]
