"""
Closed-form r-values of standard constructions and the extremal values of
the spectrum ``R(s, N)``.

Everything here is integer arithmetic: every division is an exact halving
of a product of consecutive integers, ceilings and floors are written with
``//``.
"""

from typing import FrozenSet

from addspec.exceptions import FormulaDomainError

__all__ = [
    "FormulaDomainError",
    "triangular",
    "interval_r",
    "ap_r",
    "interval_plus_point_r",
    "interval_minus_point_r",
    "g_max",
    "f_min",
    "exception_candidates",
    "exception_ladder_length",
]


def triangular(n: int) -> int:
    """``n(n+1)/2``, zero for ``n <= 0``."""
    return n * (n + 1) // 2 if n > 0 else 0


def interval_r(i: int, s: int) -> int:
    """r-value of the interval ``[i, i + s - 1]``."""
    if i < 1 or s < 1:
        raise FormulaDomainError("interval_r", {"i": i, "s": s}, "i >= 1 and s >= 1")
    return triangular(s - i)


def ap_r(x: int, a: int, s: int) -> int:
    """r-value of the progression ``{x, x + a, ..., x + (s - 1)a}``.

    The progression is ``a`` times the interval ``[x/a, x/a + s - 1]`` when
    ``a`` divides ``x`` and is sum-free otherwise.
    """
    if x < 1 or a < 1 or s < 1:
        raise FormulaDomainError(
            "ap_r", {"x": x, "a": a, "s": s}, "x, a, s >= 1"
        )
    if x % a:
        return 0
    return interval_r(x // a, s)


def interval_plus_point_r(s: int, x: int) -> int:
    """r-value of ``[1, s] | {x}`` for ``x > s``."""
    if s < 1 or x <= s:
        raise FormulaDomainError(
            "interval_plus_point_r", {"s": s, "x": x}, "s >= 1 and x >= s + 1"
        )
    base = triangular(s - 1)
    if x <= 2 * s:
        return base + (2 * s + 1 - x)
    return base


def interval_minus_point_r(i: int, s: int, x: int) -> int:
    """r-value of ``[i, i + s - 1]`` with the member ``x`` removed."""
    if i < 1 or s < 2 or not i <= x <= i + s - 1:
        raise FormulaDomainError(
            "interval_minus_point_r",
            {"i": i, "s": s, "x": x},
            "s >= 2 and i <= x <= i + s - 1",
        )
    if i >= s:
        return 0
    # (x, x) is one pair, not two, when 2x still lies in the interval
    epsilon = 1 if 2 * x <= i + s - 1 else 0
    return (
        triangular(s - i)
        - max(x - 2 * i + 1, 0)
        - max(2 * (s - x), 0)
        + epsilon
    )


def g_max(s: int) -> int:
    """Largest r-value of an s-set; ``s(s-1)/2`` for every ``N >= s``."""
    if s < 0:
        raise FormulaDomainError("g_max", {"s": s}, "s >= 0")
    return triangular(s - 1)


def f_min(s: int, N: int) -> int:
    """Smallest r-value of an s-subset of ``[1, N]``."""
    if s < 1 or s > N:
        raise FormulaDomainError("f_min", {"s": s, "N": N}, "1 <= s <= N")
    return triangular(2 * s - N - 1)


def exception_ladder_length(s: int, N: int) -> int:
    """``min(s - ceil(N/2), floor((N-s)/2))`` inside the exceptional range, else 0."""
    if s < 2 or not s + 2 <= N <= 2 * s - 2:
        return 0
    return min(s - (N + 1) // 2, (N - s) // 2)


def exception_candidates(s: int, N: int) -> FrozenSet[int]:
    """The odd ladder ``{f + 1, f + 3, ...}`` that may be missing from ``R(s, N)``.

    Empty outside ``s + 2 <= N <= 2s - 2``.
    """
    length = exception_ladder_length(s, N)
    if not length:
        return frozenset()
    f = f_min(s, N)
    return frozenset(f + 2 * i - 1 for i in range(1, length + 1))
