import pytest

from addspec.constructions import (
    ConstructionSpec,
    Family,
    Prediction,
    family_specs,
    family_values,
    maximizer_sets,
    minimizer_sets,
    realize,
    theorem46_sets,
)
from addspec.core import IntSet, r_value
from addspec.exceptions import CapacityError, ParameterRangeError

from conftest import pair_count


def members(sets):
    return [S.members for S in sets]


class TestSpec:
    def test_parse_and_format(self):
        spec = ConstructionSpec.parse("family52:s=5,a=3,x=3")
        assert spec.family is Family.FAMILY52
        assert spec.param_map == {"s": 5, "a": 3, "x": 3}
        assert spec.format() == "family52:s=5,a=3,x=3"

    def test_parameters_are_put_in_canonical_order(self):
        spec = ConstructionSpec.parse("family57: x=3, s=5, a=2")
        assert str(spec) == "family57:s=5,a=2,x=3"
        assert spec == ConstructionSpec.make("family57", s=5, a=2, x=3)

    @pytest.mark.parametrize(
        "text",
        [
            "nosuchfamily:s=1",
            "interval:i=1",
            "interval:i=1,s=2,x=3",
            "ap:x=1,a=two,s=3",
        ],
    )
    def test_bad_specs(self, text):
        with pytest.raises(ParameterRangeError):
            ConstructionSpec.parse(text)


class TestRealize:
    def test_family52(self):
        p = realize(ConstructionSpec.make(Family.FAMILY52, s=5, a=3, x=3))
        assert p.set.members == (2, 4, 5, 6, 8)
        assert p.predicted_r == 6
        assert p.in_validated_range
        assert p.source == "prop5.2"

    def test_family57(self):
        p = realize(ConstructionSpec.make(Family.FAMILY57, s=5, a=2, x=3))
        assert p.set.members == (3, 4, 5, 6, 7)
        assert p.predicted_r == 3

    def test_family52_errata(self):
        p = realize(ConstructionSpec.make(Family.FAMILY52, s=5, a=2, x=2))
        assert p.set.members == (1, 3, 4, 5, 7)
        assert p.predicted_r == 8
        assert not p.in_validated_range
        assert r_value(p.set) == 6

    def test_family53_errata(self):
        p = realize(ConstructionSpec.make(Family.FAMILY53, s=5, a=2, x=4))
        assert p.predicted_r == 9
        assert not p.in_validated_range
        assert r_value(p.set) == 8

    def test_maximizer(self):
        p = realize(ConstructionSpec.make(Family.MAXIMIZER, s=3, x1=2))
        assert p.set.members == (2, 4, 6)
        assert p.predicted_r == 3

    def test_minimizers(self):
        p = realize(ConstructionSpec.make(Family.MINIMIZER_ODDS, s=4, N=7))
        assert p.set.members == (1, 3, 5, 7)
        assert p.predicted_r == 0
        p = realize(ConstructionSpec.make(Family.MINIMIZER_INTERVAL, s=5, N=8))
        assert p.set.members == (4, 5, 6, 7, 8)
        assert p.predicted_r == 1

    @pytest.mark.parametrize(
        "family, params",
        [
            (Family.FAMILY52, {"s": 5, "a": 5, "x": 4}),
            (Family.FAMILY52, {"s": 5, "a": 3, "x": 1}),
            (Family.FAMILY57, {"s": 5, "a": 4, "x": 1}),
            (Family.MINIMIZER_ODDS, {"s": 4, "N": 8}),
            (Family.INTERVAL_PLUS_POINT, {"s": 4, "x": 4}),
        ],
    )
    def test_out_of_range(self, family, params):
        with pytest.raises(ParameterRangeError):
            realize(ConstructionSpec.make(family, **params))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            realize(ConstructionSpec.make(Family.INTERVAL, i=60, s=10))
        p = realize(ConstructionSpec.make(Family.INTERVAL, i=60, s=10), capacity=128)
        assert p.set.max() == 69

    def test_prediction_round_trip(self):
        p = realize(ConstructionSpec.make(Family.FAMILY53, s=6, a=3, x=4))
        assert Prediction.from_dict(p.to_dict()) == p


class TestPredictionsAgainstCounting:
    @pytest.mark.parametrize(
        "family", [Family.FAMILY52, Family.FAMILY53, Family.FAMILY57]
    )
    def test_validated_predictions_are_exact(self, family):
        for s in range(3, 11):
            for a in range(1, s):
                for spec in family_specs(family, s, a):
                    p = realize(spec)
                    actual = pair_count(p.set.members)
                    if p.in_validated_range:
                        assert p.predicted_r == actual, spec

    def test_family57_is_always_validated(self):
        for s in range(3, 11):
            for a in range(1, s - 1):
                for spec in family_specs(Family.FAMILY57, s, a):
                    assert realize(spec).in_validated_range

    def test_lemma_families(self):
        for s in range(2, 8):
            for i in range(1, 10):
                spec = ConstructionSpec.make(Family.INTERVAL, i=i, s=s)
                p = realize(spec)
                assert p.predicted_r == pair_count(p.set.members)
                for x in range(i, i + s):
                    spec = ConstructionSpec.make(
                        Family.INTERVAL_MINUS_POINT, i=i, s=s, x=x
                    )
                    p = realize(spec)
                    assert p.predicted_r == pair_count(p.set.members)

    def test_family_specs_cover_admissible_x(self):
        def xs(family, s, a):
            return [sp.param_map["x"] for sp in family_specs(family, s, a)]

        assert xs(Family.FAMILY52, 5, 3) == [2, 3, 4]
        assert xs(Family.FAMILY57, 5, 2) == [1, 2, 3]
        assert family_specs(Family.FAMILY53, 5, 1) == []
        with pytest.raises(ParameterRangeError):
            family_specs(Family.INTERVAL, 5, 2)

    def test_family_values(self):
        values = family_values(Family.FAMILY57, 5, 2)
        specs = family_specs(Family.FAMILY57, 5, 2)
        assert values == {realize(sp).predicted_r for sp in specs}
        assert 3 in values


class TestExtremalSets:
    @pytest.mark.parametrize(
        "s, N, expected",
        [
            (3, 7, [(1, 2, 3), (2, 4, 6)]),
            (4, 7, [(1, 2, 3, 4)]),
            (3, 6, [(1, 2, 3), (2, 4, 6)]),
        ],
    )
    def test_maximizer_sets(self, s, N, expected):
        assert members(maximizer_sets(s, N)) == expected

    @pytest.mark.parametrize(
        "s, N, expected",
        [
            (5, 8, [(4, 5, 6, 7, 8)]),
            (4, 7, [(4, 5, 6, 7), (1, 3, 5, 7)]),
            (3, 5, [(3, 4, 5), (1, 3, 5)]),
        ],
    )
    def test_minimizer_sets(self, s, N, expected):
        assert members(minimizer_sets(s, N)) == expected

    def test_minimizer_sets_range(self):
        with pytest.raises(ParameterRangeError):
            minimizer_sets(3, 6)
        with pytest.raises(ParameterRangeError):
            minimizer_sets(5, 4)

    def test_theorem46_sets(self):
        assert members(theorem46_sets(4)) == [(3, 4, 5, 6), (3, 5, 6, 7)]
        assert members(theorem46_sets(5)) == [(4, 5, 6, 7, 8), (4, 6, 7, 8, 9)]
        assert [r_value(S) for S in theorem46_sets(4)] == [1, 1]
        with pytest.raises(ParameterRangeError):
            theorem46_sets(3)

    def test_extremal_sets_attain_the_extremes(self):
        for s in range(2, 7):
            for N in range(s, 2 * s):
                assert {r_value(S) for S in maximizer_sets(s, N)} == {s * (s - 1) // 2}
        assert {r_value(S) for S in minimizer_sets(4, 7)} == {0}
        assert IntSet.of([1, 3, 5, 7]) in minimizer_sets(4, 7)
