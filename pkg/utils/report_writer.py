"""
Report rows for the turns/count commands and their JSON and CSV renderings
"""
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence

import mpmath

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import CSV_HEADER, DECIMAL_DIGITS
from errors import ParameterError


def format_decimal(value: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    """Approximation of an exact rational to the given number of significant digits"""
    with mpmath.workdps(digits + 10):
        return mpmath.nstr(mpmath.mpf(value.numerator) / value.denominator, digits, strip_zeros=False)


@dataclass(frozen=True)
class ReportRow:
    k: int
    N: int
    s: int
    kind: str
    sum: int
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ParameterError(f"row for k={self.k}, N={self.N} has no paths to average over")

    @property
    def average(self) -> Fraction:
        return Fraction(self.sum, self.count)

    def value_fields(self) -> Dict[str, str]:
        """The computed columns, as they are printed"""
        return {
            'sum': str(self.sum),
            'count': str(self.count),
            'average_exact': str(self.average),
            'average_decimal': format_decimal(self.average),
        }

    def as_dict(self) -> Dict[str, object]:
        row: Dict[str, object] = {'k': self.k, 'N': self.N, 's': self.s, 'kind': self.kind}
        row.update(self.value_fields())
        return row


def render_json(rows: Sequence[ReportRow]) -> str:
    return json.dumps([row.as_dict() for row in rows], indent=2, ensure_ascii=False) + '\n'


def render_csv(rows: Sequence[ReportRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in rows:
        values = row.as_dict()
        writer.writerow([values[column] for column in CSV_HEADER])
    return buffer.getvalue()


def render_rows(rows: Sequence[ReportRow], output_format: str) -> str:
    if output_format == 'json':
        return render_json(rows)
    if output_format == 'csv':
        return render_csv(rows)
    raise ParameterError(f"unknown output format {output_format!r}")


def render_count(k: int, n_up: int, count: int, output_format: str = 'plain') -> str:
    """The count command: a bare integer, or a one-record JSON/CSV document"""
    if output_format == 'plain':
        return f"{count}\n"
    record = {'k': k, 'N': n_up, 'count': str(count)}
    if output_format == 'json':
        return json.dumps(record, indent=2) + '\n'
    if output_format == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(list(record))
        writer.writerow(list(record.values()))
        return buffer.getvalue()
    raise ParameterError(f"unknown output format {output_format!r}")


def sorted_rows(rows: List[ReportRow]) -> List[ReportRow]:
    """Rows ordered by (k, N, s) and then min, max, osc"""
    order = {'min': 0, 'max': 1, 'osc': 2}
    return sorted(rows, key=lambda row: (row.k, row.N, row.s, order.get(row.kind, 3)))
