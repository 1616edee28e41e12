"""
Exhaustive enumeration of the spectrum ``R(s, N)``.

The ``C(N, s)`` subsets are split into contiguous colex rank intervals
(:func:`partition_ranks`), each interval is scanned independently and the
partial results are merged. The merge is associative and commutative and
every list it keeps is cut to the lexicographically smallest ``limit``
sets, so the result does not depend on the number of workers.
"""

import concurrent.futures
import time
from dataclasses import dataclass, field
from functools import reduce
from math import comb
from typing import Iterable, List, Optional, Tuple

from loguru import logger as _logger

from addspec.combinations import iter_combinations
from addspec.core import DEFAULT_CAPACITY, IntSet, iter_bits, r_value_mask
from addspec.exceptions import BudgetExceededError, CapacityError, ParameterRangeError
from addspec.formulas import g_max

DEFAULT_BUDGET = 10**9
DEFAULT_EXTREMAL_LIMIT = 64


@dataclass(frozen=True)
class SpectrumResult:
    """Attained r-values of the s-subsets of ``[1, N]`` and their extremal sets.

    ``min_sets``/``max_sets`` hold at most the configured number of sets (in
    lexicographic order); ``min_count``/``max_count`` are exact.
    """

    s: int
    N: int
    attained: Tuple[int, ...]
    f: int
    g: int
    exceptions: Tuple[int, ...]
    min_sets: Tuple[IntSet, ...]
    max_sets: Tuple[IntSet, ...]
    min_count: int
    max_count: int
    scanned: int

    def contains(self, values: Iterable[int]) -> bool:
        attained = set(self.attained)
        return all(v in attained for v in values)

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "N": self.N,
            "attained": list(self.attained),
            "f": self.f,
            "g": self.g,
            "exceptions": list(self.exceptions),
            "min_sets": [list(S.members) for S in self.min_sets],
            "max_sets": [list(S.members) for S in self.max_sets],
            "min_count": self.min_count,
            "max_count": self.max_count,
            "scanned": self.scanned,
        }

    @classmethod
    def from_dict(cls, d: dict, capacity: Optional[int] = None) -> "SpectrumResult":
        capacity = capacity or max(DEFAULT_CAPACITY, d["N"])
        return cls(
            s=d["s"],
            N=d["N"],
            attained=tuple(d["attained"]),
            f=d["f"],
            g=d["g"],
            exceptions=tuple(d["exceptions"]),
            min_sets=tuple(IntSet.of(m, capacity) for m in d["min_sets"]),
            max_sets=tuple(IntSet.of(m, capacity) for m in d["max_sets"]),
            min_count=d["min_count"],
            max_count=d["max_count"],
            scanned=d["scanned"],
        )


@dataclass(frozen=True)
class MatchingSets:
    """Sets with a prescribed r-value, truncated, with the exact total."""

    sets: Tuple[IntSet, ...]
    total: int


def partition_ranks(total: int, workers: int) -> List[range]:
    """Split ``[0, total)`` into ``workers`` contiguous intervals whose sizes
    differ by at most one (larger ones first)."""
    if workers < 1:
        raise ParameterRangeError(f"workers must be >= 1, got {workers}")
    size, extra = divmod(total, workers)
    out = []
    lo = 0
    for w in range(workers):
        hi = lo + size + (1 if w < extra else 0)
        out.append(range(lo, hi))
        lo = hi
    return out


def _lex_key(mask: int) -> Tuple[int, ...]:
    return tuple(iter_bits(mask))


def _smallest(masks: List[int], limit: int) -> List[int]:
    return sorted(masks, key=_lex_key)[:limit]


@dataclass
class _Partial:
    """Scan state of one rank interval; merged with :func:`_merge`."""

    limit: int
    target: Optional[int] = None
    attained: int = 0
    scanned: int = 0
    min_r: Optional[int] = None
    min_sets: List[int] = field(default_factory=list)
    min_count: int = 0
    max_r: Optional[int] = None
    max_sets: List[int] = field(default_factory=list)
    max_count: int = 0
    target_sets: List[int] = field(default_factory=list)
    target_count: int = 0

    def trim(self):
        self.min_sets = _smallest(self.min_sets, self.limit)
        self.max_sets = _smallest(self.max_sets, self.limit)
        self.target_sets = _smallest(self.target_sets, self.limit)


def _merge_extreme(r_a, sets_a, count_a, r_b, sets_b, count_b, better, limit):
    if r_b is None:
        return r_a, sets_a, count_a
    if r_a is None or better(r_b, r_a):
        return r_b, sets_b, count_b
    if r_a == r_b:
        return r_a, _smallest(sets_a + sets_b, limit), count_a + count_b
    return r_a, sets_a, count_a


def _merge(a: _Partial, b: _Partial) -> _Partial:
    out = _Partial(limit=a.limit, target=a.target)
    out.attained = a.attained | b.attained
    out.scanned = a.scanned + b.scanned
    out.min_r, out.min_sets, out.min_count = _merge_extreme(
        a.min_r, a.min_sets, a.min_count,
        b.min_r, b.min_sets, b.min_count,
        lambda x, y: x < y, a.limit,
    )
    out.max_r, out.max_sets, out.max_count = _merge_extreme(
        a.max_r, a.max_sets, a.max_count,
        b.max_r, b.max_sets, b.max_count,
        lambda x, y: x > y, a.limit,
    )
    out.target_sets = _smallest(a.target_sets + b.target_sets, a.limit)
    out.target_count = a.target_count + b.target_count
    return out


def _scan(s: int, N: int, ranks: range, limit: int, target: Optional[int]) -> _Partial:
    """Scan the s-subsets of ``[1, N]`` with colex rank in ``ranks``."""
    part = _Partial(limit=limit, target=target)
    if not len(ranks):
        return part
    # lists are trimmed once they hold this many candidates
    spill = max(2 * limit, 256)
    attained = 0
    min_r = max_r = None
    min_sets, max_sets, target_sets = [], [], []
    min_count = max_count = target_count = 0
    for mask in iter_combinations(s, N, ranks.start, ranks.stop):
        r = r_value_mask(mask)
        attained |= 1 << r
        if min_r is None or r < min_r:
            min_r, min_sets, min_count = r, [mask], 1
        elif r == min_r:
            min_count += 1
            min_sets.append(mask)
            if len(min_sets) > spill:
                min_sets = _smallest(min_sets, limit)
        if max_r is None or r > max_r:
            max_r, max_sets, max_count = r, [mask], 1
        elif r == max_r:
            max_count += 1
            max_sets.append(mask)
            if len(max_sets) > spill:
                max_sets = _smallest(max_sets, limit)
        if r == target:
            target_count += 1
            target_sets.append(mask)
            if len(target_sets) > spill:
                target_sets = _smallest(target_sets, limit)
    part.attained = attained
    part.scanned = len(ranks)
    part.min_r, part.min_sets, part.min_count = min_r, min_sets, min_count
    part.max_r, part.max_sets, part.max_count = max_r, max_sets, max_count
    part.target_sets, part.target_count = target_sets, target_count
    part.trim()
    return part


def _check_parameters(s: int, N: int, budget: int, capacity: int) -> int:
    if N > capacity:
        raise CapacityError(f"N={N} exceeds capacity {capacity}")
    if not 1 <= s <= N:
        raise ParameterRangeError(f"need 1 <= s <= N, got s={s}, N={N}")
    total = comb(N, s)
    if total > budget:
        raise BudgetExceededError(total, budget, f"R({s},{N})")
    return total


def _run(
    s: int,
    N: int,
    workers: int,
    budget: int,
    capacity: int,
    limit: int,
    target: Optional[int],
) -> _Partial:
    total = _check_parameters(s, N, budget, capacity)
    intervals = partition_ranks(total, max(1, min(workers, total)))
    _logger.debug(
        f"Scanning C({N},{s}) = {total} subsets in {len(intervals)} interval(s)"
    )
    t0 = time.time()
    if len(intervals) == 1:
        parts = [_scan(s, N, intervals[0], limit, target)]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=len(intervals)) as pool:
            futures = [
                pool.submit(_scan, s, N, ranks, limit, target) for ranks in intervals
            ]
            # merge in interval order, not completion order
            parts = [fut.result() for fut in futures]
    merged = reduce(_merge, parts)
    _logger.debug(f"R({s},{N}) scanned in {time.time() - t0:.3f}s")
    return merged


def _to_sets(masks: List[int], capacity: int) -> Tuple[IntSet, ...]:
    return tuple(IntSet(m, capacity) for m in masks)


def enumerate_spectrum(
    s: int,
    N: int,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    capacity: int = DEFAULT_CAPACITY,
    extremal_limit: int = DEFAULT_EXTREMAL_LIMIT,
) -> SpectrumResult:
    """Compute ``R(s, N) = {r(S) : S in [1, N], |S| = s}`` exhaustively.

    Args:
        s: set size
        N: interval bound
        workers: number of worker processes; the result does not depend on it
        budget: largest number of subsets a scan may visit
        capacity: representation bound, must be at least ``N``
        extremal_limit: number of minimum/maximum sets to keep

    Raises:
        BudgetExceededError: ``C(N, s) > budget``
        CapacityError: ``N > capacity``
    """
    part = _run(s, N, workers, budget, capacity, extremal_limit, None)
    attained = tuple(r for r in range(g_max(s) + 1) if part.attained >> r & 1)
    f, g = part.min_r, part.max_r
    exceptions = tuple(v for v in range(f, g + 1) if not part.attained >> v & 1)
    return SpectrumResult(
        s=s,
        N=N,
        attained=attained,
        f=f,
        g=g,
        exceptions=exceptions,
        min_sets=_to_sets(part.min_sets, capacity),
        max_sets=_to_sets(part.max_sets, capacity),
        min_count=part.min_count,
        max_count=part.max_count,
        scanned=part.scanned,
    )


def sets_with_r(
    s: int,
    N: int,
    r: int,
    limit: int = DEFAULT_EXTREMAL_LIMIT,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    capacity: int = DEFAULT_CAPACITY,
) -> MatchingSets:
    """All s-subsets of ``[1, N]`` with r-value ``r``.

    The first ``limit`` sets in lexicographic order are returned together with
    the exact number of matches.
    """
    part = _run(s, N, workers, budget, capacity, limit, r)
    return MatchingSets(_to_sets(part.target_sets, capacity), part.target_count)
