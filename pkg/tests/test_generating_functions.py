"""
Tests for the closed-form generating functions MIN, MAX and OSC
"""
from fractions import Fraction

import pytest

from closedform.formulas import StatRequest, TurnKind, turn_sum
from errors import ParameterError, SeriesConsistencyError
from series.generating_functions import (KernelSeries, finalize_power_series, gf_coefficient,
                                         max_gf, min_gf, osc_gf, turn_gf)
from series.power_series import SeriesZW


@pytest.mark.parametrize('builder, k, z_order, w_order, n, s, expected', [
    (min_gf, 1, 4, 2, 4, 1, 1),
    (min_gf, 1, 4, 2, 4, 2, 0),
    (min_gf, 2, 6, 1, 6, 1, 3),
    (max_gf, 1, 4, 1, 4, 1, 2),
    (max_gf, 2, 6, 2, 6, 2, 9),
    (max_gf, 1, 6, 2, 6, 2, 8),
    (osc_gf, 1, 4, 1, 4, 1, 1),
    (osc_gf, 2, 6, 1, 6, 1, 3),
])
def test_known_coefficients(builder, k, z_order, w_order, n, s, expected):
    assert builder(k, z_order, w_order).coefficient(n, s) == expected


@pytest.mark.parametrize('k', [1, 2, 3])
def test_coefficients_match_closed_forms(k):
    n_max = 5
    series = {kind: turn_gf(kind, k, (k + 1) * n_max, n_max) for kind in TurnKind}
    for n_up in range(1, n_max + 1):
        for s in range(1, n_up + 1):
            for kind in TurnKind:
                assert gf_coefficient(series[kind], n_up, s) == turn_sum(StatRequest(k, n_up, s), kind)


@pytest.mark.parametrize('k', [1, 2])
def test_osc_is_max_minus_min(k):
    assert max_gf(k, 12, 4) - min_gf(k, 12, 4) == osc_gf(k, 12, 4)


def test_results_are_integer_power_series():
    series = min_gf(2, 15, 4)
    assert series.z_shift == 0
    assert (series.z_order, series.w_order) == (15, 4)
    assert all(isinstance(value, int) for value in series.to_integer_terms().values())


def test_turn_gf_dispatch():
    assert turn_gf('max', 1, 6, 2) == turn_gf(TurnKind.MAX, 1, 6, 2)
    with pytest.raises(ParameterError):
        turn_gf('median', 1, 6, 2)


def test_bad_orders():
    with pytest.raises(ParameterError):
        min_gf(0, 6, 2)
    with pytest.raises(ParameterError):
        osc_gf(1, -1, 2)


def test_kernel_series_working_order():
    ks = KernelSeries.build(1, 4, 2)
    assert ks.ubar.z_order == 8
    assert ks.uhat_neg_k.z_shift == -1
    assert ks.one_minus_w.coefficient(0, 1) == -1


def test_finalize_rejects_low_precision():
    with pytest.raises(SeriesConsistencyError):
        finalize_power_series(SeriesZW.one(1, 3, 1), 5, 1, "test")


def test_finalize_rejects_fractions_and_residue():
    with pytest.raises(SeriesConsistencyError):
        finalize_power_series(SeriesZW(1, 5, 1, {(2, 1): Fraction(1, 3)}), 5, 1, "test")
    with pytest.raises(SeriesConsistencyError):
        finalize_power_series(SeriesZW.monomial(1, 5, 1, -1), 5, 1, "test")


def test_gf_coefficient_rejects_fractions():
    with pytest.raises(SeriesConsistencyError):
        gf_coefficient(SeriesZW(1, 4, 1, {(2, 1): Fraction(1, 2)}), 1, 1)
