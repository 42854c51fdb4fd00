from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel

from exact_core import MultiIndex


class VolumeMethod(str, Enum):
    RECURSIVE = "recursive"  # pivot recursion over compositions
    CLOSED = "closed"        # alternating sum of correlators
    INVERSION = "inversion"  # coefficient of the reverted x(y; s)
    ALL = "all"


@dataclass(frozen=True, kw_only=True)
class VolumeQuery:
    m: MultiIndex
    genus: int = 0  # anything but 0 needs a table-backed correlator provider
    method: VolumeMethod = VolumeMethod.RECURSIVE


class ResidualEntry(BaseModel):
    equation: str
    status: str  # "exact", or the first nonzero coefficient of the residual
    degree: Optional[int] = None  # x-degree of that coefficient
    weight: Optional[int] = None  # auxiliary weight of that coefficient


class PdeReport(BaseModel):
    order: int
    residuals: List[ResidualEntry]
    passed: bool

    def first_failure(self) -> Optional[ResidualEntry]:
        return next((r for r in self.residuals if r.status != "exact"), None)


class VolumeReport(BaseModel):
    m: str
    genus: int
    values: Dict[str, str]  # method -> rational text
    agreed: bool
    integral: Optional[int] = None
