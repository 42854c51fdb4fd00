"""Genus-zero higher Weil–Petersson volumes by three independent methods."""

from .cache import VOLUME_CACHE, VolumeCache
from .closed import volume_closed
from .constants import KNOWN_INTEGRALS, KNOWN_ZOGRAF
from .compute import VOLUME_TABLE_COLUMNS, compute_volume, volume_by_method, volume_table
from .generating import (
    bessel_x_series,
    check_pde,
    check_zograf_ode,
    generating_F,
    zograf_h,
)
from .inversion import (
    check_bessel_specialization,
    check_integral_of_F,
    check_linear_system,
    inverse_x_series,
    volume_via_inversion,
)
from .recursive import intersection_integral, volume_recursive, zograf_closed, zograf_v
from .types import PdeReport, ResidualEntry, VolumeMethod, VolumeQuery, VolumeReport

__all__ = [
    "KNOWN_INTEGRALS",
    "KNOWN_ZOGRAF",
    "PdeReport",
    "ResidualEntry",
    "VOLUME_CACHE",
    "VOLUME_TABLE_COLUMNS",
    "VolumeCache",
    "VolumeMethod",
    "VolumeQuery",
    "VolumeReport",
    "bessel_x_series",
    "check_bessel_specialization",
    "check_integral_of_F",
    "check_linear_system",
    "check_pde",
    "check_zograf_ode",
    "compute_volume",
    "generating_F",
    "intersection_integral",
    "inverse_x_series",
    "volume_by_method",
    "volume_closed",
    "volume_recursive",
    "volume_table",
    "volume_via_inversion",
    "zograf_closed",
    "zograf_h",
    "zograf_v",
]
