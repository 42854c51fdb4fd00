"""Betti numbers and Euler characteristics of M̄_{0,n+1}."""

from .generating import (
    APolynomial,
    implicit_equation_check,
    leading_coefficient_check,
    leading_coefficient_law,
    poincare_series,
    q_one_check,
    recover_A_polynomials,
)
from .poincare import (
    IntPolynomial,
    betti,
    betti_closed,
    betti_table,
    euler_characteristic,
    palindromic_report,
    poincare,
)

__all__ = [
    "APolynomial",
    "IntPolynomial",
    "betti",
    "betti_closed",
    "betti_table",
    "euler_characteristic",
    "implicit_equation_check",
    "leading_coefficient_check",
    "leading_coefficient_law",
    "palindromic_report",
    "poincare",
    "poincare_series",
    "q_one_check",
    "recover_A_polynomials",
]
