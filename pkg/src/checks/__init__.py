"""Self-check suites run by ``wpvol check``."""

from .suites import (
    DEFAULT_SEED,
    SUITE_NAMES,
    SUITES,
    appendix_suite,
    asym_suite,
    inversion_suite,
    laplace_suite,
    omega_suite,
    pde_suite,
    run_suite,
)

__all__ = [
    "DEFAULT_SEED",
    "SUITES",
    "SUITE_NAMES",
    "appendix_suite",
    "asym_suite",
    "inversion_suite",
    "laplace_suite",
    "omega_suite",
    "pde_suite",
    "run_suite",
]
