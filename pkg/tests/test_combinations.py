from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from addspec.combinations import (
    first_combination,
    iter_combinations,
    next_combination,
    rank,
    unrank,
)
from addspec.core import iter_bits
from addspec.exceptions import ParameterRangeError


def to_mask(members):
    mask = 0
    for m in members:
        mask |= 1 << (m - 1)
    return mask


def test_first_and_next():
    assert first_combination(3) == 0b111
    assert next_combination(0b111) == 0b1011
    assert next_combination(0b1011) == 0b1101
    assert next_combination(0b1110) == 0b10011


def test_unrank_ends():
    assert unrank(0, 3, 5) == 0b00111
    assert unrank(comb(5, 3) - 1, 3, 5) == 0b11100


def test_unrank_out_of_range():
    with pytest.raises(ParameterRangeError):
        unrank(10, 3, 5)
    with pytest.raises(ParameterRangeError):
        unrank(-1, 3, 5)


@pytest.mark.parametrize("k, n", [(1, 1), (1, 6), (3, 7), (4, 8), (5, 10), (7, 7)])
def test_iteration_visits_every_subset_once(k, n):
    masks = list(iter_combinations(k, n))
    assert len(masks) == comb(n, k)
    assert masks == sorted(set(masks))
    assert {tuple(iter_bits(m)) for m in masks} == set(combinations(range(1, n + 1), k))


def test_iteration_is_colex_ranked():
    masks = list(iter_combinations(3, 8))
    assert [rank(m) for m in masks] == list(range(comb(8, 3)))


def test_slices_concatenate():
    whole = list(iter_combinations(4, 9))
    pieces = (
        list(iter_combinations(4, 9, 0, 40))
        + list(iter_combinations(4, 9, 40, 41))
        + list(iter_combinations(4, 9, 41))
    )
    assert pieces == whole
    assert list(iter_combinations(4, 9, 50, 50)) == []


@given(data=st.data(), n=st.integers(min_value=1, max_value=40))
def test_rank_unrank_inverse(data, n):
    k = data.draw(st.integers(min_value=1, max_value=n))
    r = data.draw(st.integers(min_value=0, max_value=comb(n, k) - 1))
    mask = unrank(r, k, n)
    assert mask.bit_count() == k
    assert mask.bit_length() <= n
    assert rank(mask) == r


@given(members=st.sets(st.integers(min_value=1, max_value=30), min_size=1))
def test_rank_of_members(members):
    # combinatorial number system over 0-based positions
    expected = sum(comb(m - 1, i) for i, m in enumerate(sorted(members), start=1))
    assert rank(to_mask(members)) == expected
