"""
Truncated bivariate power series in z (length) and w (turn index) with exact
rational coefficients, and polynomials in the catalytic variable u over them
"""
import logging
import os
import sys
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

# Add parent directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from errors import ParameterError, SeriesConsistencyError, TruncationError

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]
Exponent = Tuple[int, int]


class SeriesZW:
    """Sparse series sum of c[n, s] * z^n * w^s, exact for z_shift <= n <= z_order
    and 0 <= s <= w_order.

    Values are immutable. Zero coefficients are never stored, and neither is
    anything beyond the truncation bounds: arithmetic keeps only what it can
    compute exactly and lowers the bounds accordingly.

    ``z_shift`` is the lowest z-exponent the series may carry. It is 0 for
    ordinary power series and negative for the Laurent series û^(-k).
    """

    __slots__ = ('_k', '_z_order', '_w_order', '_z_shift', '_coeffs')

    def __init__(self, k: int, z_order: int, w_order: int,
                 coeffs: Optional[Mapping[Exponent, Number]] = None, z_shift: int = 0):
        if k < 1:
            raise ParameterError(f"k must be >= 1, got {k}")
        if w_order < 0:
            raise ParameterError(f"w_order must be >= 0, got {w_order}")
        if z_shift > 0:
            raise ParameterError(f"z_shift must be <= 0, got {z_shift}")
        if z_order < z_shift:
            raise ParameterError(f"z_order {z_order} is below z_shift {z_shift}")

        store: Dict[Exponent, Fraction] = {}
        for (n, s), c in (coeffs or {}).items():
            if n < z_shift or s < 0:
                raise SeriesConsistencyError(
                    f"exponent (z^{n}, w^{s}) outside the support allowed by z_shift={z_shift}"
                )
            if n > z_order or s > w_order:
                continue
            c = Fraction(c)
            if c:
                store[(n, s)] = c
        self._k = k
        self._z_order = z_order
        self._w_order = w_order
        self._z_shift = z_shift
        self._coeffs = store

    @classmethod
    def _wrap(cls, k: int, z_order: int, w_order: int,
              store: Dict[Exponent, Fraction], z_shift: int) -> 'SeriesZW':
        """Build from an already clean store (no zeros, nothing out of bounds)"""
        series = cls.__new__(cls)
        series._k = k
        series._z_order = z_order
        series._w_order = w_order
        series._z_shift = z_shift
        series._coeffs = store
        return series

    # ==================== CONSTRUCTORS ====================

    @classmethod
    def zero(cls, k: int, z_order: int, w_order: int, z_shift: int = 0) -> 'SeriesZW':
        return cls(k, z_order, w_order, z_shift=z_shift)

    @classmethod
    def one(cls, k: int, z_order: int, w_order: int) -> 'SeriesZW':
        return cls(k, z_order, w_order, {(0, 0): 1})

    @classmethod
    def monomial(cls, k: int, z_order: int, w_order: int,
                 n: int, s: int = 0, coeff: Number = 1) -> 'SeriesZW':
        """c * z^n * w^s; a negative n makes the result a Laurent series"""
        return cls(k, z_order, w_order, {(n, s): coeff}, z_shift=min(0, n))

    @classmethod
    def from_terms(cls, k: int, z_order: int, w_order: int,
                   terms: Iterable[Tuple[int, int, Number]], z_shift: int = 0) -> 'SeriesZW':
        """Accumulate (n, s, c) triples; repeated exponents are summed"""
        acc: Dict[Exponent, Fraction] = {}
        for n, s, c in terms:
            acc[(n, s)] = acc.get((n, s), Fraction(0)) + Fraction(c)
        return cls(k, z_order, w_order, acc, z_shift=z_shift)

    # ==================== ACCESSORS ====================

    @property
    def k(self) -> int:
        return self._k

    @property
    def z_order(self) -> int:
        return self._z_order

    @property
    def w_order(self) -> int:
        return self._w_order

    @property
    def z_shift(self) -> int:
        return self._z_shift

    @property
    def coeffs(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._coeffs)

    def coefficient(self, n: int, s: int = 0) -> Fraction:
        """Coefficient of z^n w^s; asking beyond the truncation bounds is an error"""
        if n > self._z_order or s > self._w_order:
            raise TruncationError(
                f"[z^{n} w^{s}] requested from a series known up to z^{self._z_order} w^{self._w_order}"
            )
        return self._coeffs.get((n, s), Fraction(0))

    def terms(self) -> List[Tuple[int, int, Fraction]]:
        """Nonzero terms sorted by (w-exponent, z-exponent)"""
        return [(n, s, c) for (n, s), c in sorted(self._coeffs.items(), key=lambda item: (item[0][1], item[0][0]))]

    def w_part(self, s: int) -> Dict[int, Fraction]:
        """[w^s] of the series as a map from z-exponent to coefficient"""
        if s > self._w_order:
            raise TruncationError(f"[w^{s}] requested from a series known up to w^{self._w_order}")
        return {n: c for (n, t), c in sorted(self._coeffs.items()) if t == s}

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_z_exponent(self) -> Optional[int]:
        if not self._coeffs:
            return None
        return min(n for n, _ in self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[Tuple[int, int, Fraction]]:
        return iter(self.terms())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesZW):
            return NotImplemented
        return (self._k == other._k and self._z_order == other._z_order
                and self._w_order == other._w_order and self._coeffs == other._coeffs)

    __hash__ = None

    def __repr__(self) -> str:
        shown = ' + '.join(f"{c}*z^{n}*w^{s}" for n, s, c in self.terms()[:6])
        if len(self._coeffs) > 6:
            shown += ' + ...'
        return (f"SeriesZW(k={self._k}, z<={self._z_order}, w<={self._w_order}, "
                f"shift={self._z_shift}: {shown or '0'})")

    # ==================== ARITHMETIC ====================

    def _coerce(self, other) -> 'SeriesZW':
        if isinstance(other, SeriesZW):
            if other._k != self._k:
                raise SeriesConsistencyError(f"cannot combine series for k={self._k} and k={other._k}")
            return other
        if isinstance(other, (int, Fraction)):
            return SeriesZW(self._k, self._z_order, self._w_order, {(0, 0): other})
        raise TypeError(f"unsupported operand type: {type(other).__name__}")

    def __add__(self, other) -> 'SeriesZW':
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        z_order = min(self._z_order, other._z_order)
        w_order = min(self._w_order, other._w_order)
        store: Dict[Exponent, Fraction] = {}
        for source in (self._coeffs, other._coeffs):
            for (n, s), c in source.items():
                if n > z_order or s > w_order:
                    continue
                total = store.get((n, s), 0) + c
                if total:
                    store[(n, s)] = total
                else:
                    store.pop((n, s), None)
        return SeriesZW._wrap(self._k, z_order, w_order, store, min(self._z_shift, other._z_shift))

    __radd__ = __add__

    def __neg__(self) -> 'SeriesZW':
        return self.scale(-1)

    def __sub__(self, other) -> 'SeriesZW':
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'SeriesZW':
        return self._coerce(other) - self

    def scale(self, factor: Number) -> 'SeriesZW':
        factor = Fraction(factor)
        if not factor:
            return SeriesZW.zero(self._k, self._z_order, self._w_order, self._z_shift)
        store = {key: c * factor for key, c in self._coeffs.items()}
        return SeriesZW._wrap(self._k, self._z_order, self._w_order, store, self._z_shift)

    def __mul__(self, other) -> 'SeriesZW':
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SeriesZW):
            return NotImplemented
        other = self._coerce(other)
        # Coefficient n of the product needs self up to n - other.z_shift and vice versa
        z_order = min(self._z_order + other._z_shift, other._z_order + self._z_shift)
        w_order = min(self._w_order, other._w_order)
        z_shift = self._z_shift + other._z_shift
        right = sorted(other._coeffs.items())
        store: Dict[Exponent, Fraction] = {}
        for (n1, s1), c1 in self._coeffs.items():
            if s1 > w_order:
                continue
            for (n2, s2), c2 in right:
                n = n1 + n2
                if n > z_order:
                    break
                s = s1 + s2
                if s > w_order:
                    continue
                store[(n, s)] = store.get((n, s), 0) + c1 * c2
        store = {key: c for key, c in store.items() if c}
        return SeriesZW._wrap(self._k, z_order, w_order, store, min(0, z_shift))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'SeriesZW':
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        if exponent == 0:
            return SeriesZW.one(self._k, self._z_order, self._w_order)
        result = None
        base = self
        while True:
            if exponent & 1:
                result = base if result is None else result * base
            exponent >>= 1
            if not exponent:
                return result
            base = base * base

    def shift(self, dz: int, dw: int = 0) -> 'SeriesZW':
        """Multiply by z^dz * w^dw (negative exponents divide); bounds move with the exponents"""
        store: Dict[Exponent, Fraction] = {}
        for (n, s), c in self._coeffs.items():
            if s + dw < 0:
                raise SeriesConsistencyError(f"dividing by w^{-dw} leaves w^{s + dw}")
            store[(n + dz, s + dw)] = c
        w_order = self._w_order + dw
        if w_order < 0:
            raise SeriesConsistencyError(f"dividing by w^{-dw} exhausts w_order {self._w_order}")
        # z_shift follows the lowest stored exponent, not the shifted bound
        z_order = self._z_order + dz
        z_shift = min(0, z_order, min((n for n, _ in store), default=0))
        return SeriesZW._wrap(self._k, z_order, w_order, store, z_shift)

    def times_monomial(self, dz: int, dw: int = 0) -> 'SeriesZW':
        """Multiply by z^dz * w^dw (dz, dw >= 0) keeping the current truncation bounds"""
        if dz < 0 or dw < 0:
            raise ParameterError("times_monomial only raises exponents")
        store = {(n + dz, s + dw): c for (n, s), c in self._coeffs.items()
                 if n + dz <= self._z_order and s + dw <= self._w_order}
        return SeriesZW._wrap(self._k, self._z_order, self._w_order, store, self._z_shift)

    def truncate(self, z_order: Optional[int] = None, w_order: Optional[int] = None) -> 'SeriesZW':
        """Drop terms above lower bounds; bounds can only go down"""
        z_order = self._z_order if z_order is None else z_order
        w_order = self._w_order if w_order is None else w_order
        if z_order > self._z_order or w_order > self._w_order:
            raise TruncationError(
                f"cannot extend a series known up to z^{self._z_order} w^{self._w_order} "
                f"to z^{z_order} w^{w_order}"
            )
        store = {(n, s): c for (n, s), c in self._coeffs.items() if n <= z_order and s <= w_order}
        return SeriesZW._wrap(self._k, z_order, w_order, store, self._z_shift)

    def to_power_series(self) -> 'SeriesZW':
        """Same series with z_shift 0; fails if a negative z-exponent survives"""
        negative = sorted(key for key in self._coeffs if key[0] < 0)
        if negative:
            n, s = negative[0]
            raise SeriesConsistencyError(
                f"negative z-exponent residue {self._coeffs[(n, s)]}*z^{n}*w^{s}"
            )
        if self._z_order < 0:
            raise SeriesConsistencyError(f"no nonnegative z-exponent is known (z_order={self._z_order})")
        return SeriesZW._wrap(self._k, self._z_order, self._w_order, dict(self._coeffs), 0)

    def to_integer_terms(self) -> Dict[Exponent, int]:
        """Coefficients as ints; any fractional coefficient is an error"""
        result: Dict[Exponent, int] = {}
        for (n, s), c in sorted(self._coeffs.items()):
            if c.denominator != 1:
                raise SeriesConsistencyError(f"fractional coefficient {c} at z^{n} w^{s}")
            result[(n, s)] = c.numerator
        return result

    # ==================== DIVISION ====================

    def _leading_monomial(self) -> Tuple[int, int, Fraction]:
        if not self._coeffs:
            raise SeriesConsistencyError("division by the zero series")
        a = min(n for n, _ in self._coeffs)
        b = min(s for _, s in self._coeffs)
        if (a, b) not in self._coeffs:
            raise SeriesConsistencyError(
                f"divisor is not a monomial times a unit: no term at z^{a} w^{b}"
            )
        return a, b, self._coeffs[(a, b)]

    def _unit_inverse(self) -> 'SeriesZW':
        """Newton iteration inv <- inv + inv*(1 - self*inv) for a series with constant term 1"""
        one = SeriesZW.one(self._k, self._z_order, self._w_order)
        inverse = one
        max_rounds = (self._z_order + self._w_order + 1).bit_length() + 2
        for round_number in range(max_rounds):
            step = inverse + inverse * (one - self * inverse)
            if step == inverse:
                logger.debug("unit inverse converged after %d rounds", round_number)
                return inverse
            inverse = step
        raise SeriesConsistencyError(f"unit inverse did not converge in {max_rounds} rounds")

    def reciprocal(self) -> 'SeriesZW':
        return SeriesZW.one(self._k, self._z_order, self._w_order).divide(self)

    def divide(self, divisor: 'SeriesZW') -> 'SeriesZW':
        """self / divisor where divisor = c * z^a * w^b * (unit series)"""
        divisor = self._coerce(divisor)
        a, b, c = divisor._leading_monomial()
        unit = divisor.shift(-a, -b).scale(1 / c).to_power_series()
        return self.shift(-a, -b).scale(1 / c) * unit._unit_inverse()

    def __truediv__(self, other) -> 'SeriesZW':
        if isinstance(other, (int, Fraction)):
            if not other:
                raise SeriesConsistencyError("division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        if not isinstance(other, SeriesZW):
            return NotImplemented
        return self.divide(other)


class UPolySeries:
    """Polynomial sum of c_j(z, w) * u^j for j <= u_order with SeriesZW coefficients.

    Every coefficient shares the same (k, z_order, w_order) and is an ordinary
    power series. Terms above u_order are dropped silently.
    """

    __slots__ = ('_k', '_z_order', '_w_order', '_u_order', '_coeffs')

    def __init__(self, k: int, z_order: int, w_order: int, u_order: Optional[int] = None,
                 coeffs: Optional[Mapping[int, SeriesZW]] = None):
        if u_order is None:
            u_order = k * w_order + 1
        if u_order < 0:
            raise ParameterError(f"u_order must be >= 0, got {u_order}")
        store: Dict[int, SeriesZW] = {}
        for j, series in (coeffs or {}).items():
            if j < 0:
                raise SeriesConsistencyError(f"negative u-degree {j}")
            if j > u_order:
                continue
            if series.k != k:
                raise SeriesConsistencyError(f"u^{j} coefficient has k={series.k}, expected {k}")
            if series.z_order < z_order or series.w_order < w_order:
                raise TruncationError(
                    f"u^{j} coefficient known only up to z^{series.z_order} w^{series.w_order}"
                )
            series = series.to_power_series().truncate(z_order, w_order)
            if not series.is_zero():
                store[j] = series
        self._k = k
        self._z_order = z_order
        self._w_order = w_order
        self._u_order = u_order
        self._coeffs = store

    @classmethod
    def one(cls, k: int, z_order: int, w_order: int, u_order: Optional[int] = None) -> 'UPolySeries':
        return cls(k, z_order, w_order, u_order, {0: SeriesZW.one(k, z_order, w_order)})

    @classmethod
    def from_series(cls, series: SeriesZW, u_order: Optional[int] = None) -> 'UPolySeries':
        """A u-free polynomial holding a single series"""
        return cls(series.k, series.z_order, series.w_order, u_order, {0: series})

    @property
    def k(self) -> int:
        return self._k

    @property
    def z_order(self) -> int:
        return self._z_order

    @property
    def w_order(self) -> int:
        return self._w_order

    @property
    def u_order(self) -> int:
        return self._u_order

    def _zero(self) -> SeriesZW:
        return SeriesZW.zero(self._k, self._z_order, self._w_order)

    def coefficient(self, j: int) -> SeriesZW:
        """[u^j] as a SeriesZW"""
        if j > self._u_order:
            raise TruncationError(f"[u^{j}] requested from a polynomial known up to u^{self._u_order}")
        return self._coeffs.get(j, self._zero())

    def degrees(self) -> List[int]:
        return sorted(self._coeffs)

    def degree(self) -> int:
        return max(self._coeffs) if self._coeffs else -1

    def items(self) -> List[Tuple[int, SeriesZW]]:
        return [(j, self._coeffs[j]) for j in sorted(self._coeffs)]

    def is_zero(self) -> bool:
        return not self._coeffs

    def terms(self) -> List[Tuple[int, int, int, Fraction]]:
        """All nonzero (u-degree, z-exponent, w-exponent, coefficient) entries"""
        return [(j, n, s, c) for j, series in self.items() for n, s, c in series.terms()]

    def _same_shape(self, other: 'UPolySeries') -> None:
        if (self._k, self._z_order, self._w_order, self._u_order) != \
                (other._k, other._z_order, other._w_order, other._u_order):
            raise SeriesConsistencyError("polynomials in u have different parameters")

    def _with(self, store: Dict[int, SeriesZW]) -> 'UPolySeries':
        return UPolySeries(self._k, self._z_order, self._w_order, self._u_order, store)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPolySeries):
            return NotImplemented
        return (self._k, self._z_order, self._w_order, self._u_order, self._coeffs) == \
            (other._k, other._z_order, other._w_order, other._u_order, other._coeffs)

    __hash__ = None

    def __repr__(self) -> str:
        return (f"UPolySeries(k={self._k}, z<={self._z_order}, w<={self._w_order}, "
                f"u<={self._u_order}, degrees={self.degrees()})")

    def __add__(self, other: 'UPolySeries') -> 'UPolySeries':
        if not isinstance(other, UPolySeries):
            return NotImplemented
        self._same_shape(other)
        store = dict(self._coeffs)
        for j, series in other._coeffs.items():
            store[j] = store[j] + series if j in store else series
        return self._with(store)

    def __neg__(self) -> 'UPolySeries':
        return self._with({j: -series for j, series in self._coeffs.items()})

    def __sub__(self, other: 'UPolySeries') -> 'UPolySeries':
        if not isinstance(other, UPolySeries):
            return NotImplemented
        return self + (-other)

    def map_coefficients(self, func) -> 'UPolySeries':
        return self._with({j: func(series) for j, series in self._coeffs.items()})

    def shift_u(self, degree: int) -> 'UPolySeries':
        """Multiply by u^degree, dropping what passes u_order"""
        return self._with({j + degree: series for j, series in self._coeffs.items()})

    def times_kernel(self) -> 'UPolySeries':
        """(u - z - z*w*u^(k+1)) * self"""
        k = self._k
        store: Dict[int, SeriesZW] = {}

        def accumulate(j: int, series: SeriesZW) -> None:
            if j <= self._u_order:
                store[j] = store[j] + series if j in store else series

        for j, series in self._coeffs.items():
            accumulate(j + 1, series)
            accumulate(j, -series.times_monomial(1, 0))
            accumulate(j + k + 1, -series.times_monomial(1, 1))
        return self._with(store)

    def derivative_u(self) -> 'UPolySeries':
        return self._with({j - 1: series.scale(j) for j, series in self._coeffs.items() if j > 0})

    def evaluate_at_z(self) -> SeriesZW:
        """Substitute u := z"""
        result = self._zero()
        for j, series in self._coeffs.items():
            result = result + series.times_monomial(j, 0)
        return result

    def substitute(self, value: SeriesZW) -> SeriesZW:
        """Substitute u := value by Horner's rule"""
        result = self._zero()
        for j in range(self.degree(), -1, -1):
            result = result * value + self.coefficient(j)
        return result

    def restrict_w(self, max_degree: int) -> 'UPolySeries':
        """Keep only terms of w-degree <= max_degree (the w bound itself is unchanged)"""
        store = {}
        for j, series in self._coeffs.items():
            kept = {(n, s): c for (n, s), c in series.coeffs.items() if s <= max_degree}
            store[j] = SeriesZW(self._k, self._z_order, self._w_order, kept)
        return self._with(store)
