"""Brute-force oracles, independent of the bit mask kernels."""

from itertools import combinations

import pytest


def pair_count(members):
    """Ordered pairs ``(x, y)`` of ``members`` with ``x + y`` in ``members``."""
    members = list(members)
    present = set(members)
    return sum(1 for x in members for y in members if x + y in present)


def subsets(s, N):
    return combinations(range(1, N + 1), s)


def spectrum_values(s, N):
    return {pair_count(c) for c in subsets(s, N)}


def sets_with_value(s, N, r):
    return [c for c in subsets(s, N) if pair_count(c) == r]


@pytest.fixture
def oracle_r():
    return pair_count


@pytest.fixture
def oracle_spectrum():
    return spectrum_values


@pytest.fixture
def oracle_sets():
    return sets_with_value


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """No ADDSPEC_* variables and no addspec.toml in the working directory."""
    for name in ("CONFIG", "CAPACITY", "WORKERS", "BUDGET", "EXTREMAL_LIMIT"):
        monkeypatch.delenv("ADDSPEC_" + name, raising=False)
    monkeypatch.chdir(tmp_path)
    return tmp_path
