"""
Exact evaluators for the explicit coefficient formulas: Fuss-Catalan numbers,
the û and û^(-k) coefficient families, and the cumulative turn-level sums
"""
import logging
import os
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from errors import ExactnessError, ParameterError

logger = logging.getLogger(__name__)


class TurnKind(str, Enum):
    MIN = 'min'
    MAX = 'max'
    OSC = 'osc'

    @classmethod
    def parse(cls, value) -> 'TurnKind':
        try:
            return cls(getattr(value, 'value', value))
        except ValueError:
            raise ParameterError(f"unknown turn kind {value!r} (expected min, max or osc)") from None


@dataclass(frozen=True)
class StatRequest:
    """A query for the s-th turn over all k-Dyck paths with N up-steps"""
    k: int
    N: int
    s: int

    def __post_init__(self):
        for name in ('k', 'N', 's'):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ParameterError(f"{name} must be an integer, got {value!r}")
        if self.k < 1:
            raise ParameterError(f"k must be >= 1, got {self.k}")
        if self.N < 0:
            raise ParameterError(f"N must be >= 0, got {self.N}")
        if not 1 <= self.s <= self.N:
            raise ParameterError(
                f"s={self.s} is out of range: paths with N={self.N} up-steps have turns 1..{self.N}"
            )

    @property
    def length(self) -> int:
        return (self.k + 1) * self.N


def exact_div(numerator: int, denominator: int) -> int:
    """Integer division that must leave no remainder"""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ExactnessError(f"{numerator} is not divisible by {denominator}")
    return quotient


def binomial(n: int, r: int) -> int:
    """C(n, r) by the descending product; every partial product divides exactly"""
    if r < 0 or n < 0 or r > n:
        return 0
    r = min(r, n - r)
    result = 1
    for i in range(1, r + 1):
        # result * (n - r + i) is i * C(n - r + i, i)
        result = exact_div(result * (n - r + i), i)
    return result


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be an integer >= 1, got {k!r}")


def fuss_catalan(k: int, n_up: int) -> int:
    """Number of k-Dyck paths with N up-steps: C((k+1)N, N) / (kN+1)"""
    _check_k(k)
    if n_up < 0:
        raise ParameterError(f"N must be >= 0, got {n_up}")
    return exact_div(binomial((k + 1) * n_up, n_up), k * n_up + 1)


def uhat_coeff(k: int, lam: int) -> int:
    """[z^((k+1)λ+1)] û = C((k+1)λ+1, λ) / ((k+1)λ+1)"""
    _check_k(k)
    if lam < 0:
        raise ParameterError(f"λ must be >= 0, got {lam}")
    size = (k + 1) * lam + 1
    return exact_div(binomial(size, lam), size)


def down_coeff(k: int, lam: int) -> int:
    """k * C((k+1)λ, λ) / (λ+1), minus the coefficient of z^((k+1)λ+1) in û^(-k)"""
    _check_k(k)
    if lam < 0:
        raise ParameterError(f"λ must be >= 0, got {lam}")
    return exact_div(k * binomial((k + 1) * lam, lam), lam + 1)


def _correction(req: StatRequest, i: int) -> int:
    # paths up to the i-th turn times paths descending from it
    return fuss_catalan(req.k, i) * down_coeff(req.k, req.N - i)


def min_sum(req: StatRequest) -> int:
    """Sum over all paths of the level of the s-th min-turn"""
    k, n_up, s = req.k, req.N, req.s
    total = s * k * fuss_catalan(k, n_up)
    total -= sum((s + 1 - i) * _correction(req, i) for i in range(1, s + 1))
    return total


def max_sum(req: StatRequest) -> int:
    """Sum over all paths of the level of the s-th max-turn"""
    k, n_up, s = req.k, req.N, req.s
    total = s * k * fuss_catalan(k, n_up)
    total -= sum((s - i) * _correction(req, i) for i in range(1, s))
    return total


def osc_sum(req: StatRequest) -> int:
    """Sum over all paths of the s-th wavy-line length (max-turn minus min-turn)"""
    return sum(_correction(req, i) for i in range(1, req.s + 1))


def turn_sum(req: StatRequest, kind) -> int:
    kind = TurnKind.parse(kind)
    if kind is TurnKind.MIN:
        return min_sum(req)
    if kind is TurnKind.MAX:
        return max_sum(req)
    return osc_sum(req)


def _average(total: int, req: StatRequest) -> Fraction:
    return Fraction(total, fuss_catalan(req.k, req.N))


def avg_min(req: StatRequest) -> Fraction:
    return _average(min_sum(req), req)


def avg_max(req: StatRequest) -> Fraction:
    return _average(max_sum(req), req)


def avg_osc(req: StatRequest) -> Fraction:
    return _average(osc_sum(req), req)


def turn_average(req: StatRequest, kind) -> Fraction:
    """Exact average level of the s-th turn of the given kind"""
    return _average(turn_sum(req, kind), req)
