"""This is a collection of various functions."""

import os
from typing import Iterable, Optional

from loguru import logger as _logger


def parse_range(text: str) -> range:
    """Parse an inclusive integer range.

    Permissible formats:

        - ``a..b`` for ``a <= n <= b``
        - ``a`` for the single value ``a``

    Args:
        text: range text, e.g. ``"4..8"``

    Raises:
        ValueError: the text is not a range or ``b < a``
    """
    lo, sep, hi = text.strip().partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError as exc:
        _logger.opt(exception=exc).debug(f"Failed to parse range string '{text}'")
        raise ValueError(f"'{text}' is not an integer or a range a..b")
    if hi_i < lo_i:
        raise ValueError(f"empty range '{text}'")
    return range(lo_i, hi_i + 1)


def format_range(values: Iterable[int]) -> str:
    """Inverse of :func:`parse_range` for contiguous values; ``""`` if empty."""
    values = list(values)
    if not values:
        return ""
    lo, hi = min(values), max(values)
    return str(lo) if lo == hi else f"{lo}..{hi}"


def format_values(values: Iterable[int], sep: str = ",") -> str:
    return sep.join(str(v) for v in values)


def available_parallelism() -> int:
    """Number of CPUs this process may run on."""
    try:
        return len(os.sched_getaffinity(0)) or 1
    except AttributeError:
        return os.cpu_count() or 1


def parse_positive_int(text: Optional[str], name: str) -> Optional[int]:
    """Parse a positive integer setting; ``None`` passes through."""
    if text is None:
        return None
    try:
        value = int(str(text).strip())
    except ValueError:
        raise ValueError(f"{name} must be an integer, got '{text}'")
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value
