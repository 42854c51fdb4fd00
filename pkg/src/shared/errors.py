"""Exception types shared by every package.

All of them derive from ``ValueError`` (or a closely related builtin) so that
callers catching plain ``ValueError`` keep working.
"""

from typing import Sequence


class WpVolumeError(ValueError):
    """Base class for every domain error raised by the library."""


class MultiIndexParseError(WpVolumeError):
    """The text form of a multi-index could not be parsed."""


class SeriesMismatchError(WpVolumeError):
    """Two series with different variable tables or truncations were combined."""


class SeriesPreconditionError(WpVolumeError):
    """A series operation was called outside of its domain (exp, log, revert, ...)."""


class DimensionMismatchError(WpVolumeError):
    """A correlator or kappa integral was requested off its dimension constraint."""


class NormalizationError(WpVolumeError):
    """A CohFT is not normalized (C3 != 1 or B0 != 1)."""


class OrderMismatchError(WpVolumeError):
    """Two objects with different truncation orders were combined."""


class LinearSystemError(WpVolumeError):
    """An exact linear system turned out inconsistent or underdetermined."""


class IntegralityError(WpVolumeError, ArithmeticError):
    """An intersection number that must be an integer is not one."""


class CorrelatorMissingError(WpVolumeError, KeyError):
    """A table-backed correlator provider has no entry for the requested key."""

    def __init__(self, genus: int, exponents: Sequence[int]):
        self.genus = genus
        self.exponents = tuple(sorted(exponents))
        super().__init__(
            f"No correlator for genus {genus} with exponents {list(self.exponents)}"
        )

    def __str__(self) -> str:
        return self.args[0]


__all__ = [
    "WpVolumeError",
    "MultiIndexParseError",
    "SeriesMismatchError",
    "SeriesPreconditionError",
    "DimensionMismatchError",
    "NormalizationError",
    "OrderMismatchError",
    "LinearSystemError",
    "IntegralityError",
    "CorrelatorMissingError",
]
