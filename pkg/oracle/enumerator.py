"""
Ground truth by brute force: k-Dyck path enumeration, turn profiles, per-turn
level sums, and suffix counts by dynamic programming
"""
import logging
import os
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from closedform.formulas import StatRequest, TurnKind
from config import get_oracle_bound
from errors import OracleBoundError, ParameterError

logger = logging.getLogger(__name__)


class Step(str, Enum):
    UP = 'U'
    DOWN = 'D'


StepsLike = Union[str, Iterable[Union[Step, str]]]


def _parse_steps(steps: StepsLike) -> Tuple[Step, ...]:
    try:
        return tuple(step if isinstance(step, Step) else Step(step) for step in steps)
    except ValueError:
        raise ParameterError(f"steps must be U or D, got {steps!r}") from None


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be an integer >= 1, got {k!r}")


@dataclass(frozen=True)
class DyckPath:
    """Up = (1, k), Down = (1, -1); never below the axis and ending on it"""
    k: int
    steps: Tuple[Step, ...]

    def __post_init__(self):
        _check_k(self.k)
        steps = _parse_steps(self.steps)
        object.__setattr__(self, 'steps', steps)
        level = 0
        for position, step in enumerate(steps):
            level += self.k if step is Step.UP else -1
            if level < 0:
                raise ParameterError(f"path {self} goes below the axis at step {position + 1}")
        if level != 0:
            raise ParameterError(f"path {self} ends at level {level}, not 0")

    @classmethod
    def from_string(cls, text: str, k: int) -> 'DyckPath':
        return cls(k, _parse_steps(text.strip().upper()))

    @property
    def up_count(self) -> int:
        return sum(1 for step in self.steps if step is Step.UP)

    @property
    def length(self) -> int:
        return len(self.steps)

    def levels(self) -> List[int]:
        """Level before the first step and after every step"""
        levels = [0]
        for step in self.steps:
            levels.append(levels[-1] + (self.k if step is Step.UP else -1))
        return levels

    def __str__(self) -> str:
        return ''.join(step.value for step in self.steps)


@dataclass(frozen=True)
class TurnProfile:
    """Levels of every max-turn (top of an up-step) and min-turn (end of the down-run after it)"""
    max_levels: Tuple[int, ...] = field(default_factory=tuple)
    min_levels: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def wavy_lengths(self) -> Tuple[int, ...]:
        return tuple(top - bottom for top, bottom in zip(self.max_levels, self.min_levels))

    def violations(self, k: int) -> List[str]:
        """Broken profile invariants, empty for a well-formed profile"""
        problems = []
        if len(self.max_levels) != len(self.min_levels):
            problems.append(f"{len(self.max_levels)} max-turns but {len(self.min_levels)} min-turns")
            return problems
        for s, length in enumerate(self.wavy_lengths, start=1):
            if length < 0:
                problems.append(f"wavy line {s} has negative length {length}")
        for s in range(len(self.min_levels) - 1):
            if self.min_levels[s] + k != self.max_levels[s + 1]:
                problems.append(
                    f"min-turn {s + 1} at {self.min_levels[s]} does not start max-turn {s + 2} "
                    f"at {self.max_levels[s + 1]}"
                )
        if self.min_levels and self.min_levels[-1] != 0:
            problems.append(f"last min-turn at level {self.min_levels[-1]}, not 0")
        return problems


def turn_profile(path: DyckPath) -> TurnProfile:
    max_levels: List[int] = []
    min_levels: List[int] = []
    level = 0
    for step in path.steps:
        if step is Step.UP:
            if max_levels:
                min_levels.append(level)
            level += path.k
            max_levels.append(level)
        else:
            level -= 1
    if max_levels:
        min_levels.append(level)
    return TurnProfile(tuple(max_levels), tuple(min_levels))


def _walk_prefix(k: int, n_up: int, prefix: Sequence[Step]) -> Tuple[int, int]:
    """(level, up-steps used) after a prefix; rejects prefixes no path can start with"""
    level = ups = 0
    for step in prefix:
        if step is Step.UP:
            ups += 1
            level += k
        else:
            level -= 1
        if level < 0 or ups > n_up:
            raise ParameterError(f"no k-Dyck path with N={n_up} starts with {''.join(s.value for s in prefix)}")
    return level, ups


def enumerate_paths(k: int, n_up: int, prefix: StepsLike = ()) -> Iterator[DyckPath]:
    """
    Every k-Dyck path with N up-steps (and the given prefix), once each,
    in lexicographic order with U < D.
    """
    _check_k(k)
    if n_up < 0:
        raise ParameterError(f"N must be >= 0, got {n_up}")
    steps = list(_parse_steps(prefix))
    level, ups = _walk_prefix(k, n_up, steps)
    length = (k + 1) * n_up
    base = len(steps)
    if base == length:
        yield DyckPath(k, tuple(steps))
        return

    # pending[i] is the next choice (0 = U, 1 = D) for position base + i
    pending = [0]
    while pending:
        choice = pending[-1]
        if choice > 1:
            pending.pop()
            if pending:
                if steps.pop() is Step.UP:
                    level -= k
                    ups -= 1
                else:
                    level += 1
            continue
        pending[-1] = choice + 1
        if choice == 0:
            if ups == n_up:
                continue
            steps.append(Step.UP)
            level += k
            ups += 1
        else:
            if level == 0:
                continue
            steps.append(Step.DOWN)
            level -= 1

        if len(steps) == length:
            yield DyckPath(k, tuple(steps))
            # Only a down-step can finish a path
            steps.pop()
            level += 1
        else:
            pending.append(0)


def split_prefixes(k: int, n_up: int, depth: int) -> List[str]:
    """Viable prefixes of the given depth in lexicographic order; their streams partition the paths"""
    _check_k(k)
    depth = min(depth, (k + 1) * n_up)
    frontier: List[Tuple[str, int, int]] = [('', 0, 0)]
    for _ in range(depth):
        following = []
        for prefix, level, ups in frontier:
            if ups < n_up:
                following.append((prefix + 'U', level + k, ups + 1))
            if level > 0:
                following.append((prefix + 'D', level - 1, ups))
        frontier = following
    return [prefix for prefix, _, _ in frontier]


@dataclass
class OracleTotals:
    """Per-turn level sums over every path of one (k, N) instance"""
    k: int
    N: int
    count: int = 0
    min_sums: List[int] = field(default_factory=list)
    max_sums: List[int] = field(default_factory=list)
    osc_sums: List[int] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)

    def total(self, kind, s: int) -> int:
        kind = TurnKind.parse(kind)
        if not 1 <= s <= self.N:
            raise ParameterError(f"s={s} is out of range 1..{self.N}")
        sums = {TurnKind.MIN: self.min_sums, TurnKind.MAX: self.max_sums, TurnKind.OSC: self.osc_sums}[kind]
        return sums[s - 1]


def oracle_sums(k: int, n_up: int, prefix: StepsLike = ()) -> OracleTotals:
    """Fold every path into per-turn sums in one pass, recording profile violations"""
    totals = OracleTotals(k, n_up, 0, [0] * n_up, [0] * n_up, [0] * n_up)
    for path in enumerate_paths(k, n_up, prefix):
        profile = turn_profile(path)
        totals.count += 1
        for index in range(n_up):
            totals.max_sums[index] += profile.max_levels[index]
            totals.min_sums[index] += profile.min_levels[index]
            totals.osc_sums[index] += profile.wavy_lengths[index]
        for problem in profile.violations(k):
            totals.violations.append(f"{path}: {problem}")
    logger.debug("enumerated %d paths for k=%d, N=%d", totals.count, k, n_up)
    return totals


def oracle_sum(k: int, n_up: int, s: int, kind) -> int:
    """Sum over all paths of the s-th turn statistic, by enumeration"""
    StatRequest(k, n_up, s)
    return oracle_sums(k, n_up).total(kind, s)


def suffix_count(k: int, h: int, length: int, must_start_up: bool) -> int:
    """
    Step sequences of the given length from level h to level 0 that never go
    below 0, optionally forced to start with an up-step.
    """
    _check_k(k)
    if h < 0 or length < 0:
        raise ParameterError(f"level and length must be >= 0, got h={h}, L={length}")
    if length == 0:
        return 0 if must_start_up else int(h == 0)

    # Levels above the cap cannot get back to 0 in the remaining steps
    cap = h + k * -(-length // (k + 1))
    # ways[level] = sequences of the current remaining length from level to 0
    ways = [0] * (cap + 1)
    ways[0] = 1
    remaining = length - 1 if must_start_up else length
    for _ in range(remaining):
        following = [0] * (cap + 1)
        for level in range(cap + 1):
            total = ways[level - 1] if level >= 1 else 0
            if level + k <= cap:
                total += ways[level + k]
            following[level] = total
        ways = following
    start = h + k if must_start_up else h
    return ways[start] if start <= cap else 0


def path_count(k: int, n_up: int) -> int:
    """Number of k-Dyck paths with N up-steps, by the suffix-count table"""
    if n_up < 0:
        raise ParameterError(f"N must be >= 0, got {n_up}")
    return suffix_count(k, 0, (k + 1) * n_up, False)


def check_work_bound(k: int, n_up: int, bound: Optional[int] = None) -> int:
    """Refuse instances with more paths than the bound; returns the path count"""
    bound = get_oracle_bound() if bound is None else bound
    count = path_count(k, n_up)
    if count > bound:
        logger.warning("refusing to enumerate %d paths for k=%d, N=%d (bound %d)", count, k, n_up, bound)
        raise OracleBoundError(k, n_up, count, bound)
    return count
