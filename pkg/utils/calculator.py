"""
Turn-sum calculator: the same (k, N, s, kind) values by closed form, by
closed-form series, by the left/right decomposition series, or by enumeration
"""
import logging
import os
import sys
from threading import Lock
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from closedform import formulas
from closedform.formulas import StatRequest, TurnKind
from config import METHODS
from errors import MethodDisagreementError, ParameterError
from oracle.enumerator import OracleTotals, check_work_bound, oracle_sums
from series.decomposition import max_gf_by_decomposition, min_gf_by_decomposition
from series.generating_functions import gf_coefficient, turn_gf
from series.kernel import solve_kernel
from series.power_series import SeriesZW
from utils.report_writer import ReportRow

logger = logging.getLogger(__name__)

Values = Dict[Tuple[int, str], int]


class TurnCalculator:
    """Computes per-turn sums with one of the supported methods.

    Generating functions and enumeration totals are cached per instance, so a
    command that asks for many rows builds each of them once.
    """

    def __init__(self, oracle_bound: Optional[int] = None):
        self.oracle_bound = oracle_bound
        self.cache_lock = Lock()
        self._series_cache: Dict[Tuple, SeriesZW] = {}
        self._oracle_cache: Dict[Tuple[int, int], OracleTotals] = {}
        self._build_locks: Dict[Tuple, Lock] = {}

    # ==================== CACHES ====================

    def _cached_series(self, key: Tuple, builder) -> SeriesZW:
        # cache_lock guards the dicts only; each key builds under its own lock
        with self.cache_lock:
            if key in self._series_cache:
                return self._series_cache[key]
            build_lock = self._build_locks.setdefault(key, Lock())
        with build_lock:
            with self.cache_lock:
                if key in self._series_cache:
                    return self._series_cache[key]
            series = builder()
            with self.cache_lock:
                self._series_cache[key] = series
                self._build_locks.pop(key, None)
            return series

    def generating_function(self, method: str, kind: TurnKind, k: int,
                            z_order: int, w_order: int) -> SeriesZW:
        """MIN/MAX/OSC by the closed form ('series') or by the decomposition"""
        key = (method, kind.value, k, z_order, w_order)
        if method == 'series':
            return self._cached_series(key, lambda: turn_gf(kind, k, z_order, w_order))
        if method == 'decomposition':
            if kind is TurnKind.MIN:
                return self._cached_series(key, lambda: min_gf_by_decomposition(k, z_order, w_order))
            if kind is TurnKind.MAX:
                return self._cached_series(key, lambda: max_gf_by_decomposition(k, z_order, w_order))
            return self._cached_series(
                key,
                lambda: (self.generating_function(method, TurnKind.MAX, k, z_order, w_order)
                         - self.generating_function(method, TurnKind.MIN, k, z_order, w_order)),
            )
        raise ParameterError(f"method {method!r} has no generating function")

    def oracle_totals(self, k: int, n_up: int) -> OracleTotals:
        with self.cache_lock:
            if (k, n_up) in self._oracle_cache:
                return self._oracle_cache[(k, n_up)]
        check_work_bound(k, n_up, self.oracle_bound)
        totals = oracle_sums(k, n_up)
        with self.cache_lock:
            self._oracle_cache.setdefault((k, n_up), totals)
            return self._oracle_cache[(k, n_up)]

    # ==================== VALUES ====================

    def count(self, method: str, k: int, n_up: int) -> int:
        """Number of paths, computed the way the method computes everything else"""
        if method == 'closed':
            return formulas.fuss_catalan(k, n_up)
        if method == 'oracle':
            return self.oracle_totals(k, n_up).count
        # ū/z counts paths: [z^((k+1)N+1) w^N] ū
        z_order = (k + 1) * n_up + 1
        ubar = self._cached_series(('ubar', k, z_order, n_up),
                                   lambda: solve_kernel(k, True, z_order, n_up))
        return gf_coefficient(ubar.shift(-1).to_power_series(), n_up, n_up)

    def sums(self, method: str, k: int, n_up: int, s_values: Sequence[int],
             kinds: Iterable) -> Values:
        """{(s, kind): cumulative level} for the requested turns"""
        if method not in METHODS:
            raise ParameterError(f"unknown method {method!r} (expected one of {', '.join(METHODS)})")
        kinds = [TurnKind.parse(kind) for kind in kinds]
        requests = [StatRequest(k, n_up, s) for s in s_values]
        values: Values = {}
        if method == 'closed':
            for req in requests:
                for kind in kinds:
                    values[(req.s, kind.value)] = formulas.turn_sum(req, kind)
        elif method == 'oracle':
            totals = self.oracle_totals(k, n_up)
            for req in requests:
                for kind in kinds:
                    values[(req.s, kind.value)] = totals.total(kind, req.s)
        else:
            z_order = (k + 1) * n_up
            w_order = max(s_values) if s_values else 0
            for kind in kinds:
                series = self.generating_function(method, kind, k, z_order, w_order)
                for req in requests:
                    values[(req.s, kind.value)] = gf_coefficient(series, n_up, req.s)
        logger.debug("computed %d values for k=%d, N=%d by %s", len(values), k, n_up, method)
        return values

    def rows(self, method: str, k: int, n_up: int, s_values: Sequence[int],
             kinds: Sequence) -> List[ReportRow]:
        values = self.sums(method, k, n_up, s_values, kinds)
        count = self.count(method, k, n_up)
        return [
            ReportRow(k, n_up, s, TurnKind.parse(kind).value, values[(s, TurnKind.parse(kind).value)], count)
            for s in s_values
            for kind in kinds
        ]


def compare_rows(reference: Sequence[ReportRow], other: Sequence[ReportRow],
                 reference_method: str, other_method: str) -> None:
    """Raise MethodDisagreementError at the first row whose printed values differ"""
    for left, right in zip(reference, other):
        if left.value_fields() != right.value_fields():
            raise MethodDisagreementError(
                f"k={left.k}, N={left.N}, s={left.s}, kind={left.kind}: "
                f"{reference_method} gives sum={left.sum}, count={left.count} but "
                f"{other_method} gives sum={right.sum}, count={right.count}"
            )
    if len(reference) != len(other):
        raise MethodDisagreementError(
            f"{reference_method} produced {len(reference)} rows, {other_method} {len(other)}"
        )
