"""The ω-algebra of κ-classes and the ψ-class correlators feeding it."""

from .correlators import (
    CorrelatorProvider,
    CorrelatorRecord,
    CorrelatorSource,
    correlator,
    kappa_integral,
)
from .omega import (
    OmegaBasis,
    OmegaExpression,
    collect_tuples,
    expand_tuples,
    monomials_to_tuples,
    recursion_counterexample,
    roundtrip_counterexample,
    tuple_to_monomials,
    tuple_to_monomials_recursive,
    u_series_counterexample,
    u_series_identity_check,
)

__all__ = [
    "CorrelatorProvider",
    "CorrelatorRecord",
    "CorrelatorSource",
    "OmegaBasis",
    "OmegaExpression",
    "collect_tuples",
    "correlator",
    "expand_tuples",
    "kappa_integral",
    "monomials_to_tuples",
    "recursion_counterexample",
    "roundtrip_counterexample",
    "tuple_to_monomials",
    "tuple_to_monomials_recursive",
    "u_series_counterexample",
    "u_series_identity_check",
]
