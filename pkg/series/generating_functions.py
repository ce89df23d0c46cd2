"""
Closed-form generating functions MIN(z, w), MAX(z, w) and OSC(z, w) of the
cumulative turn levels, expanded as truncated series
"""
import logging
import os
import sys
from dataclasses import dataclass

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from errors import ParameterError, SeriesConsistencyError
from series.kernel import solve_kernel, uhat_neg_k
from series.power_series import SeriesZW

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelSeries:
    """The building blocks shared by the three closed forms, at one working order"""
    z: SeriesZW
    w: SeriesZW
    ubar: SeriesZW
    uhat: SeriesZW
    uhat_neg_k: SeriesZW
    one_minus_w: SeriesZW

    @classmethod
    def build(cls, k: int, z_order: int, w_order: int) -> 'KernelSeries':
        # û^(-k) starts at z^(-k) and the closed forms divide by z^2
        work = z_order + k + 3
        logger.debug("building kernel series for k=%d at working order z<=%d, w<=%d", k, work, w_order)
        w = SeriesZW.monomial(k, work, w_order, 0, 1)
        return cls(
            z=SeriesZW.monomial(k, work, w_order, 1, 0),
            w=w,
            ubar=solve_kernel(k, True, work, w_order),
            uhat=solve_kernel(k, False, work, w_order),
            uhat_neg_k=uhat_neg_k(k, work - k - 1, w_order),
            one_minus_w=SeriesZW.one(k, work, w_order) - w,
        )


def _check_orders(k: int, z_order: int, w_order: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be an integer >= 1, got {k!r}")
    if z_order < 0 or w_order < 0:
        raise ParameterError("truncation orders must be >= 0")


def finalize_power_series(series: SeriesZW, z_order: int, w_order: int, name: str) -> SeriesZW:
    """Check that a combination is a genuine integer power series and cut it to size"""
    if series.z_order < z_order:
        raise SeriesConsistencyError(
            f"{name}: working precision z<={series.z_order} is below the requested z<={z_order}"
        )
    try:
        result = series.to_power_series().truncate(z_order, w_order)
        result.to_integer_terms()
    except SeriesConsistencyError as e:
        logger.error("%s for k=%d is not an integer power series: %s", name, series.k, e)
        raise SeriesConsistencyError(f"{name}: {e}") from e
    return result


def min_gf(k: int, z_order: int, w_order: int) -> SeriesZW:
    """MIN = k*w*û/(z(1-w)^2) + (ū-z)/(z^2(1-w)^2 û^k) - (k+1)*ū*w/(z(1-w)^2)"""
    _check_orders(k, z_order, w_order)
    ks = KernelSeries.build(k, z_order, w_order)
    denominator = ks.one_minus_w ** 2
    turn_level = (ks.uhat * ks.w).scale(k).shift(-1)
    right_part = ((ks.ubar - ks.z) * ks.uhat_neg_k).shift(-2)
    overshoot = (ks.ubar * ks.w).scale(k + 1).shift(-1)
    combined = (turn_level + right_part - overshoot).divide(denominator)
    return finalize_power_series(combined, z_order, w_order, "MIN(z,w)")


def max_gf(k: int, z_order: int, w_order: int) -> SeriesZW:
    """MAX = w*k*û/(z(1-w)^2) - w*k*ū/(z(1-w)^2) + w(ū-z)/(z^2 û^k (1-w)^2) - w^2*ū/(z(1-w)^2)"""
    _check_orders(k, z_order, w_order)
    ks = KernelSeries.build(k, z_order, w_order)
    denominator = ks.one_minus_w ** 2
    numerator = (
        (ks.w * ks.uhat).scale(k).shift(-1)
        - (ks.w * ks.ubar).scale(k).shift(-1)
        + (ks.w * (ks.ubar - ks.z) * ks.uhat_neg_k).shift(-2)
        - (ks.w * ks.w * ks.ubar).shift(-1)
    )
    return finalize_power_series(numerator.divide(denominator), z_order, w_order, "MAX(z,w)")


def osc_gf(k: int, z_order: int, w_order: int) -> SeriesZW:
    """OSC = ū*w/(z(1-w)) - (ū-z)/(z^2 û^k (1-w))"""
    _check_orders(k, z_order, w_order)
    ks = KernelSeries.build(k, z_order, w_order)
    numerator = (
        (ks.ubar * ks.w).shift(-1)
        - ((ks.ubar - ks.z) * ks.uhat_neg_k).shift(-2)
    )
    return finalize_power_series(numerator.divide(ks.one_minus_w), z_order, w_order, "OSC(z,w)")


GENERATING_FUNCTIONS = {
    'min': min_gf,
    'max': max_gf,
    'osc': osc_gf,
}


def turn_gf(kind: str, k: int, z_order: int, w_order: int) -> SeriesZW:
    """Dispatch on the turn kind ('min', 'max' or 'osc')"""
    try:
        builder = GENERATING_FUNCTIONS[getattr(kind, 'value', kind)]
    except KeyError:
        raise ParameterError(f"unknown turn kind {kind!r}") from None
    return builder(k, z_order, w_order)


def gf_coefficient(series: SeriesZW, n_up: int, s: int) -> int:
    """[z^((k+1)N) w^s] of a closed-form series as an int"""
    value = series.coefficient((series.k + 1) * n_up, s)
    if value.denominator != 1:
        raise SeriesConsistencyError(f"fractional coefficient {value} at N={n_up}, s={s}")
    return value.numerator
