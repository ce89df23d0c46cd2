"""
Exception hierarchy shared by the series, closed-form, oracle and CLI layers
"""


class KDyckError(Exception):
    """Base class for all toolkit errors"""


class ParameterError(KDyckError, ValueError):
    """Invalid k, N, s, level, length, truncation order or path"""


class TruncationError(KDyckError, ValueError):
    """A coefficient was requested beyond the truncation bounds of a series"""


class SeriesConsistencyError(KDyckError, ArithmeticError):
    """Series arithmetic produced something that must not happen (internal bug)"""


class ExactnessError(KDyckError, ArithmeticError):
    """A division that has to be exact left a remainder"""


class OracleBoundError(KDyckError):
    """Enumeration refused because the instance exceeds the work bound"""

    def __init__(self, k: int, n: int, count: int, bound: int):
        super().__init__(
            f"k={k}, N={n} has {count} paths, above the oracle bound {bound}"
        )
        self.k = k
        self.n = n
        self.count = count
        self.bound = bound


class MethodDisagreementError(KDyckError):
    """Two computation methods returned different values for the same row"""
