"""
Tests for report rows, their renderings and the output file writer
"""
import json
import os
from fractions import Fraction

import pytest

from config import CSV_HEADER
from errors import ParameterError
from utils.file_manager import FileManager
from utils.report_writer import (ReportRow, format_decimal, render_count, render_csv,
                                 render_json, render_rows, sorted_rows)


def test_format_decimal():
    assert format_decimal(Fraction(2, 5)) == '0.400000000000'
    assert format_decimal(Fraction(1, 3)) == '0.333333333333'
    assert format_decimal(Fraction(2, 3), digits=3) == '0.667'


class TestReportRow:

    def test_average(self):
        row = ReportRow(1, 3, 1, 'osc', 2, 5)
        assert row.average == Fraction(2, 5)
        assert row.value_fields()['average_exact'] == '2/5'

    def test_key_order(self):
        assert list(ReportRow(2, 2, 1, 'min', 3, 3).as_dict()) == CSV_HEADER

    def test_needs_paths(self):
        with pytest.raises(ParameterError):
            ReportRow(1, 1, 1, 'min', 0, 0)


class TestRendering:

    def test_csv(self):
        text = render_csv([ReportRow(1, 3, 1, 'osc', 2, 5)])
        assert text == 'k,N,s,kind,sum,count,average_exact,average_decimal\n1,3,1,osc,2,5,2/5,0.400000000000\n'

    def test_json(self):
        text = render_json([ReportRow(1, 3, 1, 'osc', 2, 5)])
        assert text.endswith('\n')
        assert json.loads(text) == [{
            'k': 1, 'N': 3, 's': 1, 'kind': 'osc', 'sum': '2', 'count': '5',
            'average_exact': '2/5', 'average_decimal': '0.400000000000',
        }]

    def test_empty_json_is_an_array(self):
        assert json.loads(render_json([])) == []

    def test_large_sums_stay_exact(self):
        big = 10 ** 30 + 7
        row = ReportRow(1, 40, 1, 'max', big, 3)
        assert json.loads(render_json([row]))[0]['sum'] == str(big)

    def test_render_rows_dispatch(self):
        rows = [ReportRow(1, 2, 1, 'max', 2, 2)]
        assert render_rows(rows, 'csv') == render_csv(rows)
        with pytest.raises(ParameterError):
            render_rows(rows, 'xml')

    def test_count(self):
        assert render_count(2, 2, 3) == '3\n'
        assert render_count(2, 2, 3, 'csv') == 'k,N,count\n2,2,3\n'
        assert json.loads(render_count(2, 2, 3, 'json')) == {'k': 2, 'N': 2, 'count': '3'}
        with pytest.raises(ParameterError):
            render_count(2, 2, 3, 'yaml')

    def test_sorted_rows(self):
        rows = [ReportRow(1, 2, 2, 'osc', 1, 2), ReportRow(1, 2, 1, 'max', 2, 2), ReportRow(1, 2, 1, 'min', 1, 2)]
        assert [(r.s, r.kind) for r in sorted_rows(rows)] == [(1, 'min'), (1, 'max'), (2, 'osc')]


class TestFileManager:

    def test_write_text(self, tmp_path):
        target = tmp_path / 'nested' / 'rows.csv'
        success, message = FileManager.write_text(str(target), 'a\r\nb')
        assert success and message == ''
        assert target.read_bytes() == b'a\nb\n'
        assert not os.path.exists(f"{target}.part")

    def test_write_failure_is_reported(self, tmp_path):
        target = tmp_path / 'report'
        target.mkdir()
        success, message = FileManager.write_text(str(target), 'x')
        assert not success
        assert message
        assert not (tmp_path / 'report.part').exists()

    def test_missing_path(self):
        assert FileManager.write_text('', 'x') == (False, "No output file given")
        assert FileManager.remove_file('/nonexistent/file')
