"""
Difference sets and difference vectors.

For ``S = {x_1 < ... < x_s}`` the positive difference set is
``(S - S)+ = (S - S) & [1, N]`` and the i-th difference vector is
``D_S(i) = (x_{1+i} - x_1, ..., x_s - x_{s-i})``. A sum-free set has
``(S - S)+`` disjoint from ``S``, and a small ``(S - S)+`` forces a rigid
shape; :func:`classify_zero_closed` reports which one.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Tuple

from loguru import logger as _logger

from addspec.core import IntSet, r_value
from addspec.exceptions import ClassificationError, ParameterRangeError


@dataclass(frozen=True)
class DifferenceProfile:
    """``(S - S)+`` and the first difference vector of a set."""

    base: IntSet
    positive_differences: IntSet
    first_diff_vector: Tuple[int, ...]


class ZeroClosedTag(str, Enum):
    ARITHMETIC_PROGRESSION = "ArithmeticProgression"
    AP_MINUS_INNER_TERM = "APMinusInnerTerm"
    AP_MINUS_SECOND_AND_SECOND_LAST = "APMinusSecondAndSecondLast"
    SPORADIC_4_TERM = "Sporadic4Term"
    WIDE_DIFFERENCE_SET = "WideDifferenceSet"
    NOT_ZERO_CLOSED = "NotZeroClosed"
    SMALL_SET_UNCLASSIFIED = "SmallSetUnclassified"


@dataclass(frozen=True)
class ZeroClosedClass:
    """Structural class of a set.

    ``parameters`` holds ``x`` (first term) and ``a`` (common difference) for
    the progression forms, ``i`` (index of the deleted term) for
    :attr:`ZeroClosedTag.AP_MINUS_INNER_TERM` and ``b`` (middle gap) for
    :attr:`ZeroClosedTag.SPORADIC_4_TERM`.
    """

    tag: ZeroClosedTag
    parameters: Dict[str, int] = field(default_factory=dict)


def _require_size(S: IntSet, least: int):
    if len(S) < least:
        raise ParameterRangeError(f"need a set of size >= {least}, got {S}")


def positive_differences(S: IntSet) -> IntSet:
    """``(S - S) & [1, capacity]`` computed with one shift per member."""
    mask = S.mask
    diffs = 0
    for x in S:
        diffs |= mask >> x
    return IntSet(diffs, S.capacity)


def difference_vector(S: IntSet, i: int) -> Tuple[int, ...]:
    """The i-th difference vector ``(x_{1+i} - x_1, ..., x_s - x_{s-i})``.

    Computed by direct subtraction and checked against the sums of ``i``
    consecutive first differences.
    """
    xs = S.members
    s = len(xs)
    if not 1 <= i <= s - 1:
        raise ParameterRangeError(f"difference vector index {i} outside [1, {s - 1}]")
    direct = tuple(xs[j + i] - xs[j] for j in range(s - i))
    if i > 1:
        gaps = [xs[j + 1] - xs[j] for j in range(s - 1)]
        summed = tuple(sum(gaps[j:j + i]) for j in range(s - i))
        if summed != direct:
            raise RuntimeError(
                f"difference vector mismatch for {S}, i={i}: {direct} != {summed}"
            )
    return direct


def difference_profile(S: IntSet) -> DifferenceProfile:
    _require_size(S, 2)
    return DifferenceProfile(
        base=S,
        positive_differences=positive_differences(S),
        first_diff_vector=difference_vector(S, 1),
    )


def lemma41_holds(S: IntSet, k: int) -> bool:
    """True iff for every ``1 <= j <= s-1`` the union ``D_S(1) | ... | D_S(j)``
    has at most ``j + k`` distinct values."""
    _require_size(S, 2)
    span = S.max() - S.min()
    if not 0 <= k <= span:
        raise ParameterRangeError(f"k={k} outside [0, {span}]")
    seen = set()
    for j in range(1, len(S)):
        seen.update(difference_vector(S, j))
        if len(seen) > j + k:
            return False
    return True


def _match_inner_gap(gaps: Tuple[int, ...]):
    """``(a^i, 2a, a^j)``: returns ``(a, position of 2a)`` or None."""
    doubles = [p for p, g in enumerate(gaps) if g != min(gaps)]
    if len(doubles) != 1:
        return None
    a = min(gaps)
    p = doubles[0]
    if gaps[p] != 2 * a:
        return None
    return a, p


def _match_outer_gaps(gaps: Tuple[int, ...]):
    """``(2a, a^k, 2a)``: returns ``a`` or None."""
    if len(gaps) < 2:
        return None
    a = gaps[0] // 2
    if gaps[0] != 2 * a or gaps[-1] != 2 * a:
        return None
    if any(g != a for g in gaps[1:-1]):
        return None
    return a


def classify_zero_closed(S: IntSet) -> ZeroClosedClass:
    """Structural class of a set according to its r-value and ``|(S - S)+|``.

    Raises:
        ClassificationError: ``S`` is 0-closed with ``|(S - S)+| = |S| >= 4``
            but matches none of the forms such sets must have.
    """
    if r_value(S) != 0:
        return ZeroClosedClass(ZeroClosedTag.NOT_ZERO_CLOSED)
    s = len(S)
    if s <= 3:
        return ZeroClosedClass(ZeroClosedTag.SMALL_SET_UNCLASSIFIED)

    x = S.min()
    diffs = len(positive_differences(S))
    gaps = difference_vector(S, 1)
    if diffs == s - 1:
        return ZeroClosedClass(
            ZeroClosedTag.ARITHMETIC_PROGRESSION, {"x": x, "a": gaps[0]}
        )
    if diffs > s:
        return ZeroClosedClass(ZeroClosedTag.WIDE_DIFFERENCE_SET)

    # fixed priority: inner deletion, then second/second-last, then sporadic
    inner = _match_inner_gap(gaps)
    if inner is not None:
        a, p = inner
        return ZeroClosedClass(
            ZeroClosedTag.AP_MINUS_INNER_TERM, {"x": x, "a": a, "i": p + 1}
        )
    a = _match_outer_gaps(gaps)
    if a is not None:
        return ZeroClosedClass(
            ZeroClosedTag.AP_MINUS_SECOND_AND_SECOND_LAST, {"x": x, "a": a}
        )
    if s == 4 and gaps[0] == gaps[2]:
        return ZeroClosedClass(
            ZeroClosedTag.SPORADIC_4_TERM, {"x": x, "a": gaps[0], "b": gaps[1]}
        )
    _logger.warning(f"0-closed set {S} with |(S-S)+| = s matches no known form")
    raise ClassificationError(S, f"first difference vector {gaps} matches no form")
