"""Intersection numbers ⟨τ_{d₁}⋯τ_{dₙ}⟩ of ψ-classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import msgspec

from exact_core import multinomial, parse_rational
from shared.errors import CorrelatorMissingError, DimensionMismatchError
from shared.logger import get_logger

logger = get_logger(__name__)

CorrelatorKey = Tuple[int, Tuple[int, ...]]


class CorrelatorSource(str, Enum):
    BUILTIN_GENUS_0 = "builtin-genus-0"
    TABLE = "table"


class CorrelatorRecord(msgspec.Struct):
    """One line of a correlator table: ``{"g": 1, "d": [1], "value": "1/24"}``."""

    g: int
    d: List[int]
    value: str


@dataclass(frozen=True)
class CorrelatorProvider:
    """Source of correlators.

    The built-in provider answers every genus-0 query with a multinomial
    coefficient. A table provider only knows what it was given and raises
    ``CorrelatorMissingError`` for anything else.
    """

    genus: int = 0
    source: CorrelatorSource = CorrelatorSource.BUILTIN_GENUS_0
    table: Mapping[CorrelatorKey, Fraction] = field(default_factory=dict, hash=False)

    @classmethod
    def builtin(cls) -> "CorrelatorProvider":
        return cls()

    @classmethod
    def from_records(cls, records: Iterable[CorrelatorRecord], genus: Optional[int] = None) -> "CorrelatorProvider":
        table: Dict[CorrelatorKey, Fraction] = {}
        for record in records:
            table[(record.g, tuple(sorted(record.d)))] = parse_rational(record.value)
        if genus is None:
            genus = max((g for g, _ in table), default=0)
        return cls(genus=genus, source=CorrelatorSource.TABLE, table=table)

    @classmethod
    def from_jsonl(cls, path: Union[str, Path], genus: Optional[int] = None) -> "CorrelatorProvider":
        """Load a JSON-lines table; blank lines are skipped."""
        decoder = msgspec.json.Decoder(CorrelatorRecord)
        records = []
        with open(path, "rb") as handle:
            for line in handle:
                if line.strip():
                    records.append(decoder.decode(line))
        logger.info(f"Loaded {len(records)} correlators from {path}")
        return cls.from_records(records, genus=genus)

    def lookup(self, d: Sequence[int], genus: int) -> Fraction:
        key = tuple(sorted(d))
        if self.source is CorrelatorSource.BUILTIN_GENUS_0:
            if genus != 0:
                raise CorrelatorMissingError(genus, key)
            return Fraction(multinomial(sum(key), key))
        try:
            return self.table[(genus, key)]
        except KeyError:
            raise CorrelatorMissingError(genus, key) from None


def correlator(provider: CorrelatorProvider, d: Sequence[int], genus: Optional[int] = None) -> Fraction:
    """Return ⟨τ_{d₁}⋯τ_{dₙ}⟩ in the given genus (the provider's genus by default).

    The value is 0 whenever Σdᵢ ≠ 3g−3+n.

    Raises:
        DimensionMismatchError: If (g, n) is unstable.
        CorrelatorMissingError: If a table provider lacks the entry.
    """
    g = provider.genus if genus is None else genus
    n = len(d)
    if any(x < 0 for x in d):
        raise ValueError(f"Correlator exponents must be nonnegative, got {list(d)}")
    if 2 * g - 2 + n <= 0:
        raise DimensionMismatchError(f"Unstable correlator: genus {g} with {n} points")
    if sum(d) != 3 * g - 3 + n:
        return Fraction(0)
    return provider.lookup(d, g)


def kappa_integral(n: int, b: Sequence[int], provider: CorrelatorProvider, genus: int = 0) -> Fraction:
    """Return ⟨τ₀ⁿ τ_{b₁+1} ⋯ τ_{b_p+1}⟩, the integral of a κ-class product.

    Raises:
        DimensionMismatchError: Unless Σbᵢ = 3·genus − 3 + n.
    """
    if sum(b) != 3 * genus - 3 + n:
        raise DimensionMismatchError(
            f"kappa integral needs sum(b) = {3 * genus - 3 + n}, got b={list(b)}"
        )
    return correlator(provider, [0] * n + [x + 1 for x in b], genus)
