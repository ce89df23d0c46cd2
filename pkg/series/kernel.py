"""
Kernel equation u = z + z*w*u^(k+1), its series roots and the slice recurrence
"""
import logging
import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from errors import ParameterError
from series.power_series import SeriesZW, UPolySeries

logger = logging.getLogger(__name__)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be an integer >= 1, got {k!r}")


def solve_kernel(k: int, with_w: bool, z_order: int, w_order: int = 0) -> SeriesZW:
    """
    Power-series root of u = z + z*w*u^(k+1) (ū) or of u = z + z*u^(k+1) (û).
    Returns the root known exactly up to z^z_order and w^w_order.
    """
    _check_k(k)
    if z_order < 1:
        raise ParameterError(f"z_order must be >= 1, got {z_order}")
    if w_order < 0:
        raise ParameterError(f"w_order must be >= 0, got {w_order}")

    z = SeriesZW.monomial(k, z_order, w_order, 1, 0)
    step = SeriesZW.monomial(k, z_order, w_order, 1, 1 if with_w else 0)

    # Each round fixes one more block of k+1 z-exponents
    rounds = -(-z_order // (k + 1)) + 1
    u = z
    for round_number in range(1, rounds + 1):
        following = z + step * u ** (k + 1)
        if following == u:
            logger.debug("kernel root k=%d with_w=%s stable after %d rounds", k, with_w, round_number)
            break
        u = following
    return u


def kernel_residual(u: SeriesZW, with_w: bool = True) -> SeriesZW:
    """u - z - z*w*u^(k+1); the zero series exactly when u is the kernel root"""
    z = SeriesZW.monomial(u.k, u.z_order, u.w_order, 1, 0)
    step = SeriesZW.monomial(u.k, u.z_order, u.w_order, 1, 1 if with_w else 0)
    return u - z - step * u ** (u.k + 1)


def uhat_neg_k(k: int, z_order: int, w_order: int = 0) -> SeriesZW:
    """
    Laurent expansion of û^(-k) = z^(-k) * (û/z)^(-k), exact up to z^z_order.
    The result has z_shift = -k.
    """
    _check_k(k)
    if z_order < -k:
        raise ParameterError(f"z_order must be >= {-k}, got {z_order}")
    uhat = solve_kernel(k, False, z_order + k + 1, w_order)
    unit = uhat.shift(-1).to_power_series()
    return (unit ** k).reciprocal().shift(-k)


def slice_step(f: UPolySeries, k: int) -> UPolySeries:
    """
    Append one slice (an up-step and a maximal run of down-steps):
    u^j -> z*w * sum_{0 <= i <= j+k} z^i * u^(j+k-i).
    Terms beyond the truncation bounds are dropped.
    """
    _check_k(k)
    if f.k != k:
        raise ParameterError(f"polynomial was built for k={f.k}, not k={k}")
    store = {}
    for j, series in f.items():
        for i in range(j + k + 1):
            degree = j + k - i
            if degree > f.u_order:
                continue
            term = series.times_monomial(1 + i, 1)
            if term.is_zero():
                # Higher i only raises the z-exponent further
                break
            store[degree] = store[degree] + term if degree in store else term
    return UPolySeries(k, f.z_order, f.w_order, f.u_order, store)


def eval_F_at_z(k: int, z_order: int, w_order: int) -> SeriesZW:
    """F(z) = (ū - z) / (w * z^(k+2)), known up to z^z_order and w^w_order"""
    _check_k(k)
    if z_order < 0 or w_order < 0:
        raise ParameterError("truncation orders must be >= 0")
    work_z = z_order + k + 2
    ubar = solve_kernel(k, True, work_z, w_order + 1)
    z = SeriesZW.monomial(k, work_z, w_order + 1, 1, 0)
    return (ubar - z).shift(-(k + 2), -1).to_power_series().truncate(z_order, w_order)
