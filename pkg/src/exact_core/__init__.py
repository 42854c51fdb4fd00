"""Exact rational bookkeeping: multi-indices, factorials and compositions."""

from .combinatorics import (
    CompositionStream,
    binomial,
    enumerate_compositions,
    integer_compositions,
    kernel_K,
    multi_indices_of_weight,
    multi_indices_up_to,
    multinomial,
    ordered_set_partitions,
)
from .factorials import FactorialTable, factorial, set_factorial_cache_bound
from .multi_index import MultiIndex, multi_factorial, norm, weight
from .rational import format_rational, parse_rational

__all__ = [
    "CompositionStream",
    "FactorialTable",
    "MultiIndex",
    "binomial",
    "enumerate_compositions",
    "factorial",
    "format_rational",
    "integer_compositions",
    "kernel_K",
    "multi_factorial",
    "multi_indices_of_weight",
    "multi_indices_up_to",
    "multinomial",
    "norm",
    "ordered_set_partitions",
    "parse_rational",
    "set_factorial_cache_bound",
    "weight",
]
