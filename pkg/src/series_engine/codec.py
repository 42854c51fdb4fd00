"""JSON form of a GradedSeries.

``{"trunc_degree": N, "trunc_weight": W, "vars": [{"name": "s1", "weight": 1}, ...],
"terms": [{"d": 2, "e": [2, 0], "value": "5/4"}, ...]}`` with terms sorted by
``(d, e)``.
"""

from typing import List, Union

import msgspec

from exact_core.rational import format_rational, parse_rational

from .series import GradedSeries
from .variables import VariableTable


class VariableRecord(msgspec.Struct):
    name: str
    weight: int


class TermRecord(msgspec.Struct):
    d: int
    e: List[int]
    value: str


class SeriesRecord(msgspec.Struct):
    trunc_degree: int
    trunc_weight: int
    vars: List[VariableRecord]
    terms: List[TermRecord]


def series_to_record(series: GradedSeries) -> SeriesRecord:
    return SeriesRecord(
        trunc_degree=series.trunc_degree,
        trunc_weight=series.trunc_weight,
        vars=[
            VariableRecord(name=n, weight=w)
            for n, w in zip(series.variables.names, series.variables.weights)
        ],
        terms=[
            TermRecord(d=d, e=list(e), value=format_rational(c))
            for (d, e), c in series.sorted_terms()
        ],
    )


def record_to_series(record: SeriesRecord, main: str = "x") -> GradedSeries:
    variables = VariableTable(
        tuple(v.name for v in record.vars), tuple(v.weight for v in record.vars)
    )
    return GradedSeries(
        variables,
        record.trunc_degree,
        record.trunc_weight,
        {(t.d, tuple(t.e)): parse_rational(t.value) for t in record.terms},
        main=main,
    )


def encode_series(series: GradedSeries) -> bytes:
    return msgspec.json.encode(series_to_record(series))


def decode_series(data: Union[bytes, str], main: str = "x") -> GradedSeries:
    return record_to_series(msgspec.json.decode(data, type=SeriesRecord), main=main)
