"""Truncated graded power series with exact rational coefficients."""

from .codec import decode_series, encode_series, series_to_record
from .series import (
    GradedSeries,
    add,
    compose,
    derive_aux,
    derive_main,
    div,
    exp_series,
    integrate_main,
    log_series,
    mul,
    pow_formal,
    revert,
    sub,
)
from .variables import VariableTable

__all__ = [
    "GradedSeries",
    "VariableTable",
    "add",
    "compose",
    "decode_series",
    "derive_aux",
    "derive_main",
    "div",
    "encode_series",
    "exp_series",
    "integrate_main",
    "log_series",
    "mul",
    "pow_formal",
    "revert",
    "series_to_record",
    "sub",
]
