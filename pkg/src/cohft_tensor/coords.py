"""Coordinates of a normalized one-dimensional CohFT and their JSON form.

A theory of order N is given by its potential coefficients C₃..C_N (C₃ = 1),
equivalently by the coefficients B₀..B_{N−3} of U(η) (B₀ = 1) or by the
canonical coordinates s₁..s_{N−3}. JSON:
``{"order": N, "coords": "C"|"B"|"s", "values": ["1", ...]}`` with index
origin 3 for C, 0 for B and 1 for s; ``order`` is the largest index present.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Literal, Mapping, Union

import msgspec

from exact_core import format_rational, parse_rational
from shared.errors import NormalizationError, OrderMismatchError

CoordsKind = Literal["C", "B", "s"]


class CohftRecord(msgspec.Struct):
    order: int
    coords: CoordsKind
    values: List[str]


def _dense(mapping: Mapping[int, Fraction], start: int, stop: int) -> Dict[int, Fraction]:
    return {i: Fraction(mapping.get(i, 0)) for i in range(start, stop + 1)}


@dataclass(frozen=True)
class PotentialCoeffs:
    """Φ(x) = Σ_{n=3}^{order} Cₙ xⁿ/n!."""

    order: int
    C: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.order < 3:
            raise ValueError(f"A potential needs order >= 3, got {self.order}")
        values = _dense(self.C, 3, self.order)
        if 3 not in self.C:
            values[3] = Fraction(1)
        if values[3] != 1:
            raise NormalizationError(f"C3 must be 1, got {values[3]}")
        object.__setattr__(self, "C", values)

    @classmethod
    def trivial(cls, order: int) -> "PotentialCoeffs":
        return cls(order, {3: Fraction(1)})

    def __getitem__(self, n: int) -> Fraction:
        return self.C[n]

    @property
    def u_order(self) -> int:
        return self.order - 3


@dataclass(frozen=True)
class UCoeffs:
    """U(η) = Σ_{n=0}^{order} Bₙ ηⁿ; x(y) = Σ Bₙ y^{n+1}/(n+1)!."""

    order: int
    B: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        values = _dense(self.B, 0, self.order)
        if 0 not in self.B:
            values[0] = Fraction(1)
        if values[0] != 1:
            raise NormalizationError(f"B0 must be 1, got {values[0]}")
        object.__setattr__(self, "B", values)

    def __getitem__(self, n: int) -> Fraction:
        return self.B[n]


@dataclass(frozen=True)
class SCoords:
    """Canonical coordinates s₁..s_order; U(η) = exp(−Σ s_a η^a)."""

    order: int
    s: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        object.__setattr__(self, "s", _dense(self.s, 1, self.order))

    def __getitem__(self, a: int) -> Fraction:
        return self.s[a]

    def __add__(self, other: "SCoords") -> "SCoords":
        if self.order != other.order:
            raise OrderMismatchError(f"Cannot add coordinates of order {self.order} and {other.order}")
        return SCoords(self.order, {a: self.s[a] + other.s[a] for a in self.s})


Coords = Union[PotentialCoeffs, UCoeffs, SCoords]


def to_record(coords: Coords) -> CohftRecord:
    if isinstance(coords, PotentialCoeffs):
        kind, values = "C", [coords.C[n] for n in range(3, coords.order + 1)]
    elif isinstance(coords, UCoeffs):
        kind, values = "B", [coords.B[n] for n in range(0, coords.order + 1)]
    else:
        kind, values = "s", [coords.s[a] for a in range(1, coords.order + 1)]
    return CohftRecord(order=coords.order, coords=kind, values=[format_rational(v) for v in values])


def from_record(record: CohftRecord) -> Coords:
    values = [parse_rational(v) for v in record.values]
    origin = {"C": 3, "B": 0, "s": 1}[record.coords]
    if len(values) != record.order - origin + 1:
        raise OrderMismatchError(
            f"{record.coords}-coordinates of order {record.order} need "
            f"{record.order - origin + 1} values, got {len(values)}"
        )
    mapping = {origin + i: v for i, v in enumerate(values)}
    if record.coords == "C":
        return PotentialCoeffs(record.order, mapping)
    if record.coords == "B":
        return UCoeffs(record.order, mapping)
    return SCoords(record.order, mapping)


def encode_coords(coords: Coords) -> bytes:
    return msgspec.json.encode(to_record(coords))


def decode_coords(data: Union[bytes, str]) -> Coords:
    return from_record(msgspec.json.decode(data, type=CohftRecord))


def read_coords(path: Union[str, Path]) -> Coords:
    return decode_coords(Path(path).read_bytes())
