"""
Fixed-weight bit masks in colexicographic order.

The k-subsets of ``[1, n]`` are walked as n-bit masks of weight k in
increasing numeric order, which is colexicographic order on the member
lists. A mask's position in that order is its rank in the combinatorial
number system::

    rank({c_1 < ... < c_k}) = sum_i C(c_i - 1, i)

so a worker can :func:`unrank` its start position and step from there with
:func:`next_combination`.
"""

from math import comb
from typing import Iterator, Optional

from addspec.exceptions import ParameterRangeError


def first_combination(k: int) -> int:
    """The lowest mask of weight ``k``: ``{1, ..., k}``."""
    return (1 << k) - 1


def next_combination(mask: int) -> int:
    """Next mask with the same number of set bits (Gosper's hack).

    ``mask`` must be non-zero.
    """
    low = mask & -mask
    ripple = mask + low
    return (((ripple ^ mask) >> 2) // low) | ripple


def rank(mask: int) -> int:
    """Colexicographic rank of ``mask`` among masks of the same weight."""
    r = 0
    i = 0
    while mask:
        low = mask & -mask
        i += 1
        r += comb(low.bit_length() - 1, i)
        mask ^= low
    return r


def unrank(r: int, k: int, n: int) -> int:
    """The mask of weight ``k`` inside ``n`` bits whose colex rank is ``r``."""
    total = comb(n, k)
    if not 0 <= r < total:
        raise ParameterRangeError(f"rank {r} outside [0, C({n},{k})={total})")
    mask = 0
    c = n
    for i in range(k, 0, -1):
        c -= 1
        while comb(c, i) > r:
            c -= 1
        r -= comb(c, i)
        mask |= 1 << c
    return mask


def iter_combinations(
    k: int, n: int, start: int = 0, stop: Optional[int] = None
) -> Iterator[int]:
    """Yield the weight-``k`` masks of ``n`` bits, colex rank in ``[start, stop)``."""
    total = comb(n, k)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    mask = unrank(start, k, n)
    for _ in range(stop - start - 1):
        yield mask
        mask = next_combination(mask)
    yield mask
