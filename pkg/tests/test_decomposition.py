"""
Tests for the left/right decomposition series
"""
import pytest

from errors import ParameterError
from oracle.enumerator import suffix_count
from series.decomposition import (kernel_identity_residual, max_gf_by_decomposition,
                                  max_left_part, max_right_part, min_gf_by_decomposition,
                                  min_right_part, osc_gf_by_decomposition, slice_sum)
from series.generating_functions import max_gf, min_gf, osc_gf
from series.kernel import solve_kernel
from series.power_series import SeriesZW, UPolySeries


def test_min_right_part_for_k1():
    right = min_right_part(1, 1, 6)
    assert [right.coefficient(n) for n in range(7)] == [0, 0, 0, 1, 0, 3, 0]


@pytest.mark.parametrize('k', [1, 2])
def test_right_parts_count_suffixes(k):
    for h in range(0, 5):
        right_max = max_right_part(k, h, 20)
        for length in range(21):
            assert right_max.coefficient(length) == suffix_count(k, h, length, False)
    for h in range(1, 5):
        right_min = min_right_part(k, h, 20)
        for length in range(21):
            assert right_min.coefficient(length) == suffix_count(k, h, length, True)


def test_right_part_levels_are_checked():
    with pytest.raises(ParameterError):
        min_right_part(1, 0, 5)
    with pytest.raises(ParameterError):
        max_right_part(1, -1, 5)


def test_slice_sum_without_slices_is_one():
    assert slice_sum(1, 6, 0) == UPolySeries.one(1, 6, 0)


@pytest.mark.parametrize('k', [1, 2, 3])
def test_slice_sum_satisfies_the_kernel_identity(k):
    left = slice_sum(k, 16, 4)
    assert kernel_identity_residual(left, solve_kernel(k, True, 16, 4)).is_zero()


def test_missing_slices_break_the_identity():
    left = UPolySeries.one(1, 10, 3)
    assert not kernel_identity_residual(left, solve_kernel(1, True, 10, 3)).is_zero()


def test_max_left_part_adds_an_up_step():
    left = max_left_part(UPolySeries.one(1, 4, 1))
    assert left.degrees() == [1]
    assert left.coefficient(1) == SeriesZW.monomial(1, 4, 1, 1, 1)


@pytest.mark.parametrize('k', [1, 2])
def test_decomposition_matches_closed_forms(k):
    n_max = 4
    z_order = (k + 1) * n_max
    pairs = [
        (min_gf_by_decomposition(k, z_order, n_max), min_gf(k, z_order, n_max)),
        (max_gf_by_decomposition(k, z_order, n_max), max_gf(k, z_order, n_max)),
        (osc_gf_by_decomposition(k, z_order, n_max), osc_gf(k, z_order, n_max)),
    ]
    for by_parts, closed in pairs:
        for n_up in range(1, n_max + 1):
            for s in range(1, n_up + 1):
                n = (k + 1) * n_up
                assert by_parts.coefficient(n, s) == closed.coefficient(n, s)
