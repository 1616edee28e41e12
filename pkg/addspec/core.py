"""
Set representation and r-value computation.

An :class:`IntSet` is a finite subset of ``[1, capacity]`` stored as a bit
mask: bit ``k`` is set iff ``k + 1`` is a member. The r-value

    r(S) = |{(x, y) in S x S : x + y in S}|

counts ordered pairs, so ``(x, y)`` and ``(y, x)`` are two pairs and ``(x, x)``
is one. It can be computed in four equivalent ways (see :class:`RMethod`);
:func:`r_value` uses the shift form on the mask, the direct pair loop is kept
as an independent oracle.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Tuple

from addspec.exceptions import CapacityError, ParameterRangeError

DEFAULT_CAPACITY = 64
MAX_CAPACITY = 128


def _check_capacity(capacity: int):
    if not 1 <= capacity <= MAX_CAPACITY:
        raise CapacityError(
            f"capacity must lie in [1, {MAX_CAPACITY}], got {capacity}"
        )


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the members encoded by ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


@dataclass(frozen=True)
class IntSet:
    """A subset of ``[1, capacity]``.

    Capacity is a representation bound only: two sets with the same members
    compare (and hash) equal whatever their capacities.

    Args:
        mask: bit mask, bit ``k`` set iff ``k + 1`` is a member
        capacity: largest representable member
    """

    mask: int = 0
    capacity: int = field(default=DEFAULT_CAPACITY, compare=False)

    def __post_init__(self):
        _check_capacity(self.capacity)
        if self.mask < 0:
            raise CapacityError("mask must be non-negative")
        if self.mask.bit_length() > self.capacity:
            raise CapacityError(
                f"member {self.mask.bit_length()} exceeds capacity {self.capacity}"
            )

    @classmethod
    def of(cls, members: Iterable[int], capacity: Optional[int] = None) -> "IntSet":
        """Build a set from its members (duplicates are ignored)."""
        capacity = DEFAULT_CAPACITY if capacity is None else capacity
        _check_capacity(capacity)
        mask = 0
        for m in members:
            if not 1 <= m <= capacity:
                raise CapacityError(f"member {m} outside [1, {capacity}]")
            mask |= 1 << (m - 1)
        return cls(mask, capacity)

    @classmethod
    def interval(cls, lo: int, hi: int, capacity: Optional[int] = None) -> "IntSet":
        """The interval ``[lo, hi]``; empty if ``hi < lo``."""
        return cls.of(range(lo, hi + 1), capacity)

    @classmethod
    def parse(cls, text: str, capacity: Optional[int] = None) -> "IntSet":
        """Parse the canonical text form, e.g. ``"1,3,4,5,7"``.

        Braces and whitespace are tolerated; the empty string is the empty set.
        """
        body = text.strip().strip("{}").strip()
        if not body:
            return cls.of((), capacity)
        try:
            members = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise ParameterRangeError(
                f"not a comma-separated list of integers: '{text}'"
            )
        return cls.of(members, capacity)

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def size(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and x >= 1 and bool(self.mask >> (x - 1) & 1)

    def min(self) -> int:
        if not self.mask:
            raise ValueError("empty set has no minimum")
        return (self.mask & -self.mask).bit_length()

    def max(self) -> int:
        if not self.mask:
            raise ValueError("empty set has no maximum")
        return self.mask.bit_length()

    def issubset(self, other: "IntSet") -> bool:
        return self.mask & ~other.mask == 0

    def dilate(self, c: int) -> "IntSet":
        """Return ``c * S = {c*x : x in S}``."""
        if c < 1:
            raise CapacityError(f"dilation factor must be positive, got {c}")
        return IntSet.of((c * x for x in self), self.capacity)

    def remove(self, *xs: int) -> "IntSet":
        mask = self.mask
        for x in xs:
            mask &= ~(1 << (x - 1))
        return IntSet(mask, self.capacity)

    def add(self, *xs: int) -> "IntSet":
        return IntSet.of(self.members + xs, self.capacity)

    def format(self) -> str:
        """Canonical text form: ascending comma-separated members."""
        return ",".join(str(m) for m in self)

    def __str__(self) -> str:
        return "{" + self.format() + "}"

    def __repr__(self) -> str:
        return f"IntSet({{{self.format()}}})"


class RMethod(str, Enum):
    """The equivalent definitions of the r-value."""

    PAIR_SUM = "pair_sum"
    PAIR_DIFFERENCE = "pair_difference"
    SHIFT_SUM = "shift_sum"
    DIFFERENCE_SUM = "difference_sum"


def r_value_mask(mask: int) -> int:
    """r-value of a raw mask as ``sum_x |S & (S + x)|``; the enumeration kernel."""
    r = 0
    m = mask
    while m:
        low = m & -m
        r += (mask & (mask << low.bit_length())).bit_count()
        m ^= low
    return r


def _pair_sum(S: IntSet) -> int:
    members = S.members
    return sum(1 for x in members for y in members if (x + y) in S)


def _pair_difference(S: IntSet) -> int:
    members = S.members
    return sum(1 for x in members for y in members if (x - y) in S)


def _difference_sum(S: IntSet) -> int:
    mask = S.mask
    return sum((mask & (mask >> x)).bit_count() for x in S)


_METHODS = {
    RMethod.PAIR_SUM: _pair_sum,
    RMethod.PAIR_DIFFERENCE: _pair_difference,
    RMethod.SHIFT_SUM: lambda S: r_value_mask(S.mask),
    RMethod.DIFFERENCE_SUM: _difference_sum,
}


def r_value(S: IntSet) -> int:
    """Number of ordered pairs ``(x, y)`` of members with ``x + y`` a member."""
    return r_value_mask(S.mask)


def r_value_by(S: IntSet, method) -> int:
    """Compute the r-value with an explicit method.

    Args:
        S: the set
        method: a :class:`RMethod` or its string value
    """
    return _METHODS[RMethod(method)](S)


def is_sum_free(S: IntSet) -> bool:
    """True iff no two (not necessarily distinct) members sum to a member."""
    return r_value_mask(S.mask) == 0
