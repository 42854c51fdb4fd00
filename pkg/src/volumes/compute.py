"""Entry points that answer a VolumeQuery and export volume tables."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional

import pandas as pd

from cohft_algebra import CorrelatorProvider
from exact_core import MultiIndex, format_rational, multi_indices_up_to
from shared.logger import get_logger

from .closed import volume_closed
from .inversion import volume_via_inversion
from .recursive import intersection_integral, volume_recursive
from .types import VolumeMethod, VolumeQuery, VolumeReport

logger = get_logger(__name__)

VOLUME_TABLE_COLUMNS = ["m", "weight", "norm", "value", "integral"]


def volume_by_method(m: MultiIndex, method: VolumeMethod, provider: Optional[CorrelatorProvider] = None, genus: int = 0) -> Fraction:
    if method is VolumeMethod.RECURSIVE:
        return volume_recursive(m)
    if method is VolumeMethod.CLOSED:
        return volume_closed(m, provider, genus)
    if method is VolumeMethod.INVERSION:
        return volume_via_inversion(m.weight)[m]
    raise ValueError(f"volume_by_method needs a single method, got {method.value}")


def compute_volume(query: VolumeQuery, provider: Optional[CorrelatorProvider] = None) -> VolumeReport:
    """Evaluate V_g(m) by the requested method (every applicable one for ``all``).

    Only the correlator formula works in positive genus, so ``all`` reduces to
    it there. The integral ∫ω^m is reported for genus 0 only.
    """
    if query.genus and query.method not in (VolumeMethod.CLOSED, VolumeMethod.ALL):
        raise ValueError(f"Genus {query.genus} volumes need the closed method, not {query.method.value}")
    if query.method is VolumeMethod.ALL:
        methods = [VolumeMethod.CLOSED] if query.genus else [
            VolumeMethod.RECURSIVE, VolumeMethod.CLOSED, VolumeMethod.INVERSION
        ]
    else:
        methods = [query.method]

    values: Dict[str, Fraction] = {}
    for method in methods:
        values[method.value] = volume_by_method(query.m, method, provider, query.genus)
        logger.debug(f"V({query.m.to_text()}) by {method.value} = {values[method.value]}")

    agreed = len(set(values.values())) == 1
    if not agreed:
        logger.warning(f"Methods disagree on V({query.m.to_text()}): {values}")
    integral = None
    if query.genus == 0 and agreed:
        integral = intersection_integral(query.m, next(iter(values.values())))
    return VolumeReport(
        m=query.m.to_text(),
        genus=query.genus,
        values={k: format_rational(v) for k, v in values.items()},
        agreed=agreed,
        integral=integral,
    )


def volume_table(order: int) -> pd.DataFrame:
    """Every genus-zero V(m) with |m| ≤ order, one row per multi-index."""
    rows = []
    for m in multi_indices_up_to(order):
        value = volume_recursive(m)
        rows.append(
            {
                "m": m.to_text(),
                "weight": m.weight,
                "norm": m.norm,
                "value": format_rational(value),
                "integral": intersection_integral(m, value),
            }
        )
    return pd.DataFrame(rows, columns=VOLUME_TABLE_COLUMNS)
