"""
Left/right decomposition of a k-Dyck path at its s-th turn.

The left part is built slice by slice in the catalytic variable u (the level
of the last turn); the right part is a power of û. Summing level * left * right
over all levels gives MIN and MAX without the closed forms.
"""
import logging
import os
import sys
from typing import Optional

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from errors import ParameterError
from series.generating_functions import finalize_power_series
from series.kernel import slice_step, solve_kernel
from series.power_series import SeriesZW, UPolySeries

logger = logging.getLogger(__name__)


def min_right_part(k: int, h: int, z_order: int, w_order: int = 0) -> SeriesZW:
    """(û - z) * û^h / z: from level h >= 1 down to 0, first step up, by length"""
    if h < 1:
        raise ParameterError(f"the min right part needs h >= 1, got {h}")
    uhat = solve_kernel(k, False, z_order + 1, w_order)
    z = SeriesZW.monomial(k, z_order + 1, w_order, 1, 0)
    return ((uhat - z) * uhat ** h).shift(-1).to_power_series().truncate(z_order, w_order)


def max_right_part(k: int, h: int, z_order: int, w_order: int = 0) -> SeriesZW:
    """û^(h+1) / z: from level h >= 0 down to 0 without restriction, by length"""
    if h < 0:
        raise ParameterError(f"the max right part needs h >= 0, got {h}")
    uhat = solve_kernel(k, False, z_order + 1, w_order)
    return (uhat ** (h + 1)).shift(-1).to_power_series().truncate(z_order, w_order)


def slice_sum(k: int, z_order: int, w_order: int, u_order: Optional[int] = None) -> UPolySeries:
    """F_0(u) + ... + F_M(u) with M = w_order, F_0 = 1, F_(m+1) = slice_step(F_m)"""
    current = UPolySeries.one(k, z_order, w_order, u_order)
    total = current
    for m in range(1, w_order + 1):
        current = slice_step(current, k)
        if current.is_zero():
            logger.debug("slice recurrence for k=%d vanished after %d slices", k, m - 1)
            break
        total = total + current
    return total


def max_left_part(left: UPolySeries) -> UPolySeries:
    """G(u) = F(u) * w * z * u^k: one more up-step after the last min-turn"""
    return left.map_coefficients(lambda series: series.times_monomial(1, 1)).shift_u(left.k)


def kernel_identity_residual(left: UPolySeries, ubar: SeriesZW) -> UPolySeries:
    """(u - z - z*w*u^(k+1)) * F - (u - ū); vanishes when F is the full slice sum"""
    ubar = ubar.truncate(left.z_order, left.w_order)
    one = SeriesZW.one(left.k, left.z_order, left.w_order)
    u_minus_ubar = UPolySeries(left.k, left.z_order, left.w_order, left.u_order, {0: -ubar, 1: one})
    return left.times_kernel() - u_minus_ubar


def _level_weighted_sum(left: UPolySeries, right_part, name: str) -> SeriesZW:
    total = SeriesZW.zero(left.k, left.z_order, left.w_order)
    for h, series in left.items():
        if h == 0:
            continue
        total = total + series.scale(h) * right_part(h)
    return finalize_power_series(total, left.z_order, left.w_order, name)


def min_gf_by_decomposition(k: int, z_order: int, w_order: int) -> SeriesZW:
    """sum over h >= 1 of h * [u^h]F(u) * (û - z) * û^h / z"""
    left = slice_sum(k, z_order, w_order)
    return _level_weighted_sum(
        left, lambda h: min_right_part(k, h, z_order, w_order), "MIN(z,w) by decomposition"
    )


def max_gf_by_decomposition(k: int, z_order: int, w_order: int) -> SeriesZW:
    """sum over h >= 1 of h * [u^h]G(u) * û^(h+1) / z"""
    left = max_left_part(slice_sum(k, z_order, w_order))
    return _level_weighted_sum(
        left, lambda h: max_right_part(k, h, z_order, w_order), "MAX(z,w) by decomposition"
    )


def osc_gf_by_decomposition(k: int, z_order: int, w_order: int) -> SeriesZW:
    return max_gf_by_decomposition(k, z_order, w_order) - min_gf_by_decomposition(k, z_order, w_order)
