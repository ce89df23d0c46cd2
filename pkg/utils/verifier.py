"""
Self-check for the k-Dyck turn statistics.

Every computation path is run against the others: kernel roots against the
closed coefficient formulas, the closed-form generating functions against the
decomposition series, and all of them against exhaustive enumeration.
"""
import logging
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from closedform import formulas
from closedform.formulas import StatRequest, TurnKind
from config import (EXIT_OK, EXIT_VERIFY_FAILED, VERIFY_K_MAX, VERIFY_MAX_LEVEL,
                    VERIFY_N_MAX, VERIFY_W_ORDER, VERIFY_WORKERS, VERIFY_Z_ORDER,
                    get_oracle_bound)
from errors import OracleBoundError
from oracle.enumerator import check_work_bound, oracle_sums, path_count, suffix_count
from series.decomposition import (kernel_identity_residual, max_right_part,
                                  min_right_part, slice_sum)
from series.generating_functions import gf_coefficient
from series.kernel import eval_F_at_z, kernel_residual, solve_kernel, uhat_neg_k
from series.power_series import SeriesZW
from utils.calculator import TurnCalculator

logger = logging.getLogger(__name__)

PASS, FAIL, SKIP = 'PASS', 'FAIL', 'SKIP'

# Report order within one k
STAGES = ['kernel', 'laurent', 'slices', 'right parts', 'turn sums', 'enumeration']


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    k: int
    N: int = -1
    detail: str = ''
    # (k, N, s) of the first disagreeing value, for turn-sum failures
    cell: Optional[Tuple[int, int, int]] = None

    @property
    def sort_key(self) -> Tuple[int, int, int, str]:
        return self.k, STAGES.index(self.name), self.N, self.status

    def line(self) -> str:
        where = f"k={self.k}" if self.N < 0 else f"k={self.k}, N={self.N}"
        text = f"{self.status} {self.name} [{where}]"
        return f"{text}: {self.detail}" if self.detail else text


class Verifier:
    """Cross-checks the series, closed-form and enumeration results"""

    def __init__(self, k_max: int = VERIFY_K_MAX, n_max: int = VERIFY_N_MAX,
                 z_order: int = VERIFY_Z_ORDER, w_order: int = VERIFY_W_ORDER,
                 max_level: int = VERIFY_MAX_LEVEL, workers: int = VERIFY_WORKERS,
                 oracle_bound: Optional[int] = None):
        self.k_max = k_max
        self.n_max = n_max
        self.z_order = z_order
        self.w_order = w_order
        self.max_level = max_level
        self.workers = max(1, workers)
        self.oracle_bound = get_oracle_bound() if oracle_bound is None else oracle_bound
        self.calculator = TurnCalculator(self.oracle_bound)
        self.results: List[CheckResult] = []

    # ==================== HELPERS ====================

    def _guarded(self, name: str, k: int, check: Callable[[], Optional[str]], n_up: int = -1) -> CheckResult:
        """Run one check; a returned message or any exception is a failure"""
        try:
            problem = check()
        except Exception as e:
            logger.exception("check %s for k=%d failed with an error", name, k)
            problem = f"{type(e).__name__}: {e}"
        return CheckResult(name, FAIL if problem else PASS, k, n_up, problem or '')

    # ==================== SERIES CHECKS ====================

    def check_kernel(self, k: int) -> Optional[str]:
        """Both roots solve their kernel equation and carry the Fuss-Catalan numbers"""
        ubar = solve_kernel(k, True, self.z_order, self.w_order)
        uhat = solve_kernel(k, False, self.z_order, 0)
        if not kernel_residual(ubar, True).is_zero():
            return "ū does not satisfy u = z + z*w*u^(k+1)"
        if not kernel_residual(uhat, False).is_zero():
            return "û does not satisfy u = z + z*u^(k+1)"

        for n, s, c in ubar.terms():
            if n != (k + 1) * s + 1:
                return f"ū has a term z^{n} w^{s} off the diagonal n = (k+1)s + 1"
        for s in range(self.w_order + 1):
            n = (k + 1) * s + 1
            if n <= self.z_order and ubar.coefficient(n, s) != formulas.fuss_catalan(k, s):
                return f"[z^{n} w^{s}] ū = {ubar.coefficient(n, s)}, expected {formulas.fuss_catalan(k, s)}"
        for n in range(self.z_order + 1):
            lam, rest = divmod(n - 1, k + 1)
            expected = formulas.uhat_coeff(k, lam) if n >= 1 and rest == 0 else 0
            if uhat.coefficient(n) != expected:
                return f"[z^{n}] û = {uhat.coefficient(n)}, expected {expected}"
            if n >= 1 and rest == 0 and formulas.uhat_coeff(k, lam) != formulas.fuss_catalan(k, lam):
                return f"the two Fuss-Catalan forms differ at λ={lam}"
        return None

    def check_laurent(self, k: int) -> Optional[str]:
        """û^(-k) coefficients, and û^k * û^(-k) = 1"""
        inverse = uhat_neg_k(k, self.z_order)
        for n in range(-k, self.z_order + 1):
            lam, rest = divmod(n - 1, k + 1)
            if n == -k:
                expected = 1
            elif n >= 1 and rest == 0:
                expected = -formulas.down_coeff(k, lam)
            else:
                expected = 0
            if inverse.coefficient(n) != expected:
                return f"[z^{n}] û^(-k) = {inverse.coefficient(n)}, expected {expected}"

        uhat = solve_kernel(k, False, self.z_order + k, 0)
        product = (uhat ** k * inverse).to_power_series()
        if product != SeriesZW.one(k, product.z_order, 0):
            return "û^k * û^(-k) is not 1"
        return None

    def check_slices(self, k: int) -> Optional[str]:
        """The slice sum satisfies the kernel identity and agrees with F(z)"""
        left = slice_sum(k, self.z_order, self.w_order)
        ubar = solve_kernel(k, True, self.z_order, self.w_order)
        residual = kernel_identity_residual(left, ubar)
        if not residual.is_zero():
            return "(u - z - z*w*u^(k+1)) * F(u) differs from u - ū"
        if eval_F_at_z(k, self.z_order, self.w_order) != left.evaluate_at_z():
            return "F(z) from the kernel root differs from the slice sum at u = z"
        return None

    def _suffix_series(self, k: int, h: int, starts_up: bool, like: SeriesZW) -> SeriesZW:
        """Suffix counts from level h as a series in z, bounded like the right part"""
        counts = ((length, 0, suffix_count(k, h, length, starts_up))
                  for length in range(like.z_order + 1))
        return SeriesZW.from_terms(k, like.z_order, like.w_order, counts)

    @staticmethod
    def _first_difference(series: SeriesZW, counted: SeriesZW) -> int:
        return next(n for n in range(series.z_order + 1) if series.coefficient(n) != counted.coefficient(n))

    def check_right_parts(self, k: int) -> Optional[str]:
        """Right-part coefficients count the suffixes from level h"""
        for h in range(self.max_level + 1):
            parts = [('max', max_right_part(k, h, self.z_order), False)]
            if h >= 1:
                parts.append(('min', min_right_part(k, h, self.z_order), True))
            for kind, series, starts_up in parts:
                counted = self._suffix_series(k, h, starts_up, series)
                if series != counted:
                    n = self._first_difference(series, counted)
                    return (f"{kind} right part h={h}: [z^{n}] = {series.coefficient(n)}, "
                            f"{counted.coefficient(n)} suffixes")
        return None

    def run_series_checks(self, k: int) -> List[CheckResult]:
        logger.info("running series checks for k=%d", k)
        return [
            self._guarded('kernel', k, lambda: self.check_kernel(k)),
            self._guarded('laurent', k, lambda: self.check_laurent(k)),
            self._guarded('slices', k, lambda: self.check_slices(k)),
            self._guarded('right parts', k, lambda: self.check_right_parts(k)),
        ]

    # ==================== TURN-SUM CELLS ====================

    def check_cell(self, k: int, n_up: int) -> List[CheckResult]:
        """All methods on every (s, kind) of one (k, N), plus the path counts"""
        results: List[CheckResult] = []
        totals = None
        try:
            check_work_bound(k, n_up, self.oracle_bound)
            totals = oracle_sums(k, n_up)
        except OracleBoundError as e:
            results.append(CheckResult('enumeration', SKIP, k, n_up, str(e)))

        def counts() -> Optional[str]:
            expected = formulas.fuss_catalan(k, n_up)
            found = {
                'path count': path_count(k, n_up),
                'series': self.calculator.count('series', k, n_up),
            }
            if totals is not None:
                found['enumeration'] = totals.count
            for method, value in found.items():
                if value != expected:
                    return f"{method} counts {value} paths, Fuss-Catalan gives {expected}"
            if totals is not None and totals.violations:
                return f"turn profile broken: {totals.violations[0]}"
            return None

        if totals is not None:
            results.append(self._guarded('enumeration', k, counts, n_up))

        if n_up >= 1:
            failure: List[Tuple[int, int, int]] = []

            def sums() -> Optional[str]:
                problem = self._compare_sums(k, n_up, totals, failure)
                if problem is None and totals is None:
                    return counts()
                return problem

            result = self._guarded('turn sums', k, sums, n_up)
            if failure:
                result = CheckResult(result.name, result.status, k, n_up, result.detail, failure[0])
            results.append(result)
        return results

    def _compare_sums(self, k: int, n_up: int, totals, failure: List) -> Optional[str]:
        z_order, w_order = (k + 1) * self.n_max, self.n_max
        series = {
            method: {kind: self.calculator.generating_function(method, kind, k, z_order, w_order)
                     for kind in TurnKind}
            for method in ('series', 'decomposition')
        }
        for s in range(1, n_up + 1):
            req = StatRequest(k, n_up, s)
            for kind in TurnKind:
                values: Dict[str, int] = {'closed': formulas.turn_sum(req, kind)}
                for method, gfs in series.items():
                    values[method] = gf_coefficient(gfs[kind], n_up, s)
                if totals is not None:
                    values['enumeration'] = totals.total(kind, s)
                if len(set(values.values())) > 1:
                    failure.append((k, n_up, s))
                    shown = ', '.join(f"{method}={value}" for method, value in values.items())
                    return f"s={s} {kind.value}: {shown}"

            closed = {kind: formulas.turn_sum(req, kind) for kind in TurnKind}
            if closed[TurnKind.OSC] != closed[TurnKind.MAX] - closed[TurnKind.MIN]:
                failure.append((k, n_up, s))
                return f"s={s}: osc sum is not max sum minus min sum"

        count = formulas.fuss_catalan(k, n_up)
        if formulas.turn_sum(StatRequest(k, n_up, 1), TurnKind.MAX) != k * count:
            failure.append((k, n_up, 1))
            return "the first max-turn is not always at level k"
        if formulas.turn_sum(StatRequest(k, n_up, n_up), TurnKind.MIN) != 0:
            failure.append((k, n_up, n_up))
            return "the last min-turn is not always at level 0"
        return None

    # ==================== DRIVER ====================

    def run_all_checks(self) -> List[CheckResult]:
        """Run every check, fanning the (k, N) cells out over worker threads"""
        start_time = time.time()
        ks = range(1, self.k_max + 1)
        cells = [(k, n_up) for k in ks for n_up in range(self.n_max + 1)]
        results: List[CheckResult] = []
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            for batch in pool.map(self.run_series_checks, ks):
                results.extend(batch)
            for batch in pool.map(lambda cell: self.check_cell(*cell), cells):
                results.extend(batch)
        self.results = sorted(results, key=lambda result: result.sort_key)
        logger.info("ran %d checks in %.2f seconds", len(self.results), time.time() - start_time)
        return self.results

    def smallest_failing_cell(self) -> Optional[Tuple[int, int, int]]:
        cells = [result.cell for result in self.results if result.cell is not None]
        return min(cells) if cells else None

    def report_lines(self) -> List[str]:
        lines = [result.line() for result in self.results]
        tally = {status: sum(1 for r in self.results if r.status == status) for status in (PASS, FAIL, SKIP)}
        lines.append(
            f"summary: {len(self.results)} checks, {tally[PASS]} passed, "
            f"{tally[FAIL]} failed, {tally[SKIP]} skipped"
        )
        cell = self.smallest_failing_cell()
        if cell is not None:
            lines.append(f"smallest failing cell: k={cell[0]}, N={cell[1]}, s={cell[2]}")
        return lines

    @property
    def passed(self) -> bool:
        return all(result.status != FAIL for result in self.results)

    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_VERIFY_FAILED
