import pytest
from hypothesis import given, strategies as st

from addspec.core import IntSet
from addspec.exceptions import BudgetExceededError, CapacityError, ParameterRangeError
from addspec.spectrum import (
    SpectrumResult,
    enumerate_spectrum,
    partition_ranks,
    sets_with_r,
)

from conftest import sets_with_value, spectrum_values


def members(sets):
    return [S.members for S in sets]


class TestPartition:
    def test_balanced(self):
        assert partition_ranks(10, 3) == [range(0, 4), range(4, 7), range(7, 10)]

    def test_single(self):
        assert partition_ranks(15, 1) == [range(0, 15)]

    def test_empty(self):
        parts = partition_ranks(0, 4)
        assert len(parts) == 4
        assert all(len(p) == 0 for p in parts)

    def test_needs_a_worker(self):
        with pytest.raises(ParameterRangeError):
            partition_ranks(10, 0)

    @given(total=st.integers(min_value=0, max_value=10**6), workers=st.integers(1, 64))
    def test_covers_contiguously(self, total, workers):
        parts = partition_ranks(total, workers)
        assert len(parts) == workers
        assert parts[0].start == 0 and parts[-1].stop == total
        for left, right in zip(parts, parts[1:]):
            assert left.stop == right.start
            assert len(left) - len(right) in (0, 1)


class TestEnumerateSpectrum:
    def test_r33(self):
        sp = enumerate_spectrum(3, 3)
        assert sp.attained == (3,)
        assert sp.f == sp.g == 3
        assert sp.exceptions == ()
        assert members(sp.min_sets) == [(1, 2, 3)]

    def test_r34(self):
        sp = enumerate_spectrum(3, 4)
        assert sp.attained == (1, 2, 3)
        assert sp.exceptions == ()
        assert sp.scanned == 4

    @pytest.mark.parametrize("N", [5, 6, 7, 9])
    def test_r3n_is_full(self, N):
        assert enumerate_spectrum(3, N).attained == (0, 1, 2, 3)

    def test_r46(self):
        sp = enumerate_spectrum(4, 6)
        assert sp.attained == (1, 3, 4, 5, 6)
        assert sp.exceptions == (2,)
        assert (sp.f, sp.g) == (1, 6)
        assert sp.scanned == 15

    @pytest.mark.parametrize("s, N", [(2, 5), (4, 8), (5, 9), (6, 10), (7, 11)])
    def test_matches_brute_force(self, s, N):
        sp = enumerate_spectrum(s, N)
        assert set(sp.attained) == spectrum_values(s, N)

    def test_extremal_sets_and_counts(self):
        sp = enumerate_spectrum(4, 7)
        assert members(sp.min_sets) == [(1, 3, 5, 7), (4, 5, 6, 7)]
        assert sp.min_count == 2
        assert members(sp.max_sets) == [(1, 2, 3, 4)]
        assert sp.max_count == 1

    def test_extremal_lists_are_truncated(self):
        sp = enumerate_spectrum(2, 12, extremal_limit=3)
        zero = sets_with_value(2, 12, 0)
        assert members(sp.min_sets) == sorted(zero)[:3]
        assert sp.min_count == len(zero)

    def test_workers_do_not_change_the_result(self):
        single = enumerate_spectrum(5, 11, workers=1, extremal_limit=5)
        split = enumerate_spectrum(5, 11, workers=3, extremal_limit=5)
        assert split == single

    @pytest.mark.slow
    def test_r8_16_for_any_worker_count(self):
        results = [enumerate_spectrum(8, 16, workers=w) for w in (1, 2, 8)]
        assert results[1] == results[0]
        assert results[2] == results[0]
        assert results[0].scanned == 12870

    def test_round_trip(self):
        sp = enumerate_spectrum(4, 6)
        assert SpectrumResult.from_dict(sp.to_dict()) == sp
        assert sp.contains([1, 3]) and not sp.contains([2])

    def test_budget(self):
        with pytest.raises(BudgetExceededError) as info:
            enumerate_spectrum(10, 20, budget=1000)
        assert info.value.total == 184756
        assert info.value.budget == 1000

    def test_capacity(self):
        with pytest.raises(CapacityError):
            enumerate_spectrum(3, 70)
        assert enumerate_spectrum(1, 70, capacity=128).attained == (0,)

    @pytest.mark.parametrize("s, N", [(0, 4), (5, 4)])
    def test_parameters(self, s, N):
        with pytest.raises(ParameterRangeError):
            enumerate_spectrum(s, N)


class TestSetsWithR:
    def test_zero_closed_in_8(self):
        found = sets_with_r(4, 8, 0, limit=10)
        assert members(found.sets) == [
            (1, 3, 5, 7),
            (2, 3, 7, 8),
            (4, 5, 6, 7),
            (5, 6, 7, 8),
        ]
        assert found.total == 4

    def test_r_one_in_7(self):
        found = sets_with_r(4, 7, 1, limit=10)
        assert members(found.sets) == [(2, 3, 6, 7), (3, 4, 5, 6), (3, 5, 6, 7)]
        assert found.total == 3

    def test_r_two_in_4(self):
        found = sets_with_r(3, 4, 2, limit=10)
        assert found.sets == (IntSet.of([1, 2, 4]), IntSet.of([1, 3, 4]))

    def test_limit(self):
        found = sets_with_r(4, 8, 0, limit=2)
        assert members(found.sets) == [(1, 3, 5, 7), (2, 3, 7, 8)]
        assert found.total == 4

    def test_unattained(self):
        found = sets_with_r(4, 6, 2)
        assert found.sets == () and found.total == 0

    @pytest.mark.parametrize("r", [0, 1, 3, 6])
    def test_matches_brute_force_across_workers(self, r):
        expected = sets_with_value(5, 10, r)
        for workers in (1, 2):
            found = sets_with_r(5, 10, r, limit=1000, workers=workers)
            assert members(found.sets) == sorted(expected)
            assert found.total == len(expected)
