"""
Parametric set families with predicted r-values.

:func:`realize` turns a :class:`ConstructionSpec` into the explicit set and
the value its closed form predicts. Predictions are the published formulas
as stated; where a formula is known to disagree with direct counting the
:class:`Prediction` says so through ``in_validated_range`` instead of
correcting the number.

Text form of a spec: ``<family>:<name>=<value>,...``, for example
``family52:s=5,a=3,x=3``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from addspec.core import IntSet
from addspec.exceptions import ParameterRangeError
from addspec.formulas import (
    ap_r,
    f_min,
    g_max,
    interval_minus_point_r,
    interval_plus_point_r,
    interval_r,
)


class Family(str, Enum):
    INTERVAL = "interval"
    AP = "ap"
    INTERVAL_PLUS_POINT = "interval_plus_point"
    INTERVAL_MINUS_POINT = "interval_minus_point"
    MAXIMIZER = "maximizer"
    MINIMIZER_INTERVAL = "minimizer_interval"
    MINIMIZER_ODDS = "minimizer_odds"
    FAMILY52 = "family52"
    FAMILY53 = "family53"
    FAMILY57 = "family57"


# parameter names in canonical order
FAMILY_PARAMETERS: Dict[Family, Tuple[str, ...]] = {
    Family.INTERVAL: ("i", "s"),
    Family.AP: ("x", "a", "s"),
    Family.INTERVAL_PLUS_POINT: ("s", "x"),
    Family.INTERVAL_MINUS_POINT: ("i", "s", "x"),
    Family.MAXIMIZER: ("s", "x1"),
    Family.MINIMIZER_INTERVAL: ("s", "N"),
    Family.MINIMIZER_ODDS: ("s", "N"),
    Family.FAMILY52: ("s", "a", "x"),
    Family.FAMILY53: ("s", "a", "x"),
    Family.FAMILY57: ("s", "a", "x"),
}

# statement each family's prediction comes from
FAMILY_SOURCES: Dict[Family, str] = {
    Family.INTERVAL: "lemma2.4",
    Family.AP: "lemma2.5",
    Family.INTERVAL_PLUS_POINT: "lemma2.6",
    Family.INTERVAL_MINUS_POINT: "lemma2.7",
    Family.MAXIMIZER: "thm3.1",
    Family.MINIMIZER_INTERVAL: "thm3.3",
    Family.MINIMIZER_ODDS: "thm3.4",
    Family.FAMILY52: "prop5.2",
    Family.FAMILY53: "prop5.3",
    Family.FAMILY57: "prop5.7",
}


@dataclass(frozen=True)
class ConstructionSpec:
    """A family tag with its integer parameters.

    Args:
        family: the set family
        params: ``(name, value)`` pairs in the family's canonical order
    """

    family: Family
    params: Tuple[Tuple[str, int], ...]

    @classmethod
    def make(cls, family, **params: int) -> "ConstructionSpec":
        family = Family(family)
        names = FAMILY_PARAMETERS[family]
        if set(params) != set(names):
            raise ParameterRangeError(
                f"{family.value} takes parameters {', '.join(names)}, "
                f"got {', '.join(sorted(params)) or 'none'}"
            )
        return cls(family, tuple((n, int(params[n])) for n in names))

    @classmethod
    def parse(cls, text: str) -> "ConstructionSpec":
        """Parse ``"family52:s=5,a=3,x=3"``."""
        head, sep, body = text.strip().partition(":")
        try:
            family = Family(head.strip().lower())
        except ValueError:
            known = ", ".join(f.value for f in Family)
            raise ParameterRangeError(f"unknown family '{head}' (known: {known})")
        params = {}
        for item in filter(None, (p.strip() for p in body.split(","))):
            name, eq, value = item.partition("=")
            try:
                params[name.strip()] = int(value)
            except ValueError:
                raise ParameterRangeError(f"bad parameter '{item}' in '{text}'")
        return cls.make(family, **params)

    @property
    def param_map(self) -> Dict[str, int]:
        return dict(self.params)

    def format(self) -> str:
        return f"{self.family.value}:" + ",".join(f"{n}={v}" for n, v in self.params)

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class Prediction:
    """A realised construction and the r-value its formula predicts.

    ``in_validated_range`` is False where the formula is known to disagree
    with direct counting; the value is still the formula's.
    """

    set: IntSet
    predicted_r: Optional[int]
    source: str
    in_validated_range: bool = True

    def to_dict(self) -> dict:
        return {
            "set": list(self.set.members),
            "predicted_r": self.predicted_r,
            "source": self.source,
            "in_validated_range": self.in_validated_range,
        }

    @classmethod
    def from_dict(cls, d: dict, capacity: Optional[int] = None) -> "Prediction":
        return cls(
            set=IntSet.of(d["set"], capacity),
            predicted_r=d["predicted_r"],
            source=d["source"],
            in_validated_range=d["in_validated_range"],
        )


def _require(ok: bool, spec: ConstructionSpec, constraint: str):
    if not ok:
        raise ParameterRangeError(f"{spec}: requires {constraint}")


def _family52_r(s: int, a: int, x: int) -> int:
    # deleting x and s+a-1 from [a-1, s+a]
    alpha = x - (a - 1)
    delta = 1 if 2 * alpha == s - a + 1 else 0
    base = (s - a) * (s - a + 1) // 2
    if alpha <= min(a - 2, s - a):
        return base + 1 + 2 * alpha - delta
    return base + a - 1 + alpha - delta


def _family53_r(s: int, a: int, x: int) -> int:
    # deleting x and s+a from [a-1, s+a]
    alpha = x - (a - 1)
    delta = 1 if 2 * alpha == s - a + 2 else 0
    base = (s - a) * (s - a + 1) // 2
    if alpha <= min(a - 2, s - a):
        return base + 2 * alpha - delta
    return base + a - 2 + alpha - delta


def _family57_r(s: int, a: int, x: int) -> int:
    # adjoining x to [a+2, s+a]
    if a == s - 2:
        alpha = (s - 1) - x
        return 2 * alpha + 1 if 2 * alpha <= s - 2 else 2 * alpha
    alpha = (a + 1) - x
    base = (s - a - 1) * (s - a) // 2
    return base + 2 * alpha if 2 * alpha <= a else base + 2 * alpha - 1


def realize(spec: ConstructionSpec, capacity: Optional[int] = None) -> Prediction:
    """Build the set described by ``spec`` and its predicted r-value.

    Raises:
        ParameterRangeError: the parameters are outside the family's range.
        CapacityError: the set does not fit ``capacity``.
    """
    p = spec.param_map
    fam = spec.family
    source = FAMILY_SOURCES[fam]
    validated = True

    if fam is Family.INTERVAL:
        i, s = p["i"], p["s"]
        _require(i >= 1 and s >= 1, spec, "i >= 1 and s >= 1")
        members = range(i, i + s)
        predicted = interval_r(i, s)
    elif fam is Family.AP:
        x, a, s = p["x"], p["a"], p["s"]
        _require(x >= 1 and a >= 1 and s >= 1, spec, "x, a, s >= 1")
        members = range(x, x + s * a, a)
        predicted = ap_r(x, a, s)
    elif fam is Family.INTERVAL_PLUS_POINT:
        s, x = p["s"], p["x"]
        _require(s >= 1 and x >= s + 1, spec, "s >= 1 and x >= s + 1")
        members = list(range(1, s + 1)) + [x]
        predicted = interval_plus_point_r(s, x)
    elif fam is Family.INTERVAL_MINUS_POINT:
        i, s, x = p["i"], p["s"], p["x"]
        _require(
            i >= 1 and s >= 2 and i <= x <= i + s - 1,
            spec,
            "i >= 1, s >= 2 and i <= x <= i + s - 1",
        )
        members = [m for m in range(i, i + s) if m != x]
        predicted = interval_minus_point_r(i, s, x)
    elif fam is Family.MAXIMIZER:
        s, x1 = p["s"], p["x1"]
        _require(s >= 1 and x1 >= 1, spec, "s >= 1 and x1 >= 1")
        members = range(x1, s * x1 + 1, x1)
        predicted = g_max(s)
    elif fam is Family.MINIMIZER_INTERVAL:
        s, N = p["s"], p["N"]
        _require(1 <= s <= N, spec, "1 <= s <= N")
        members = range(N - s + 1, N + 1)
        predicted = f_min(s, N)
    elif fam is Family.MINIMIZER_ODDS:
        s, N = p["s"], p["N"]
        _require(N % 2 == 1 and 2 * s == N + 1, spec, "N odd and 2s = N + 1")
        members = range(1, 2 * (N - s) + 2, 2)
        predicted = f_min(s, N)
    elif fam in (Family.FAMILY52, Family.FAMILY53):
        s, a, x = p["s"], p["a"], p["x"]
        _require(
            2 <= a <= s - 1 and a - 1 <= x <= s - 1,
            spec,
            "2 <= a <= s - 1 and a - 1 <= x <= s - 1",
        )
        if fam is Family.FAMILY52:
            deleted = (x, s + a - 1)
            predicted = _family52_r(s, a, x)
            # a = 2 puts (1, s+1) in the interval unless x = 1 is deleted too;
            # (x, x) is only a pair of the interval while 2x <= s+a
            validated = (a >= 3 or x == a - 1) and 2 * x <= s + a
        else:
            deleted = (x, s + a)
            predicted = _family53_r(s, a, x)
            validated = 2 * x <= s + a
        members = [m for m in range(a - 1, s + a + 1) if m not in deleted]
    elif fam is Family.FAMILY57:
        s, a, x = p["s"], p["a"], p["x"]
        _require(
            1 <= a <= s - 2 and 1 <= x <= a + 1,
            spec,
            "1 <= a <= s - 2 and 1 <= x <= a + 1",
        )
        members = [x] + list(range(a + 2, s + a + 1))
        predicted = _family57_r(s, a, x)
    else:  # pragma: no cover
        raise ParameterRangeError(f"unhandled family {fam}")

    return Prediction(
        set=IntSet.of(members, capacity),
        predicted_r=predicted,
        source=source,
        in_validated_range=validated,
    )


def family_specs(family, s: int, a: int) -> List[ConstructionSpec]:
    """All specs of a 5.2/5.3/5.7-style family for fixed ``s`` and ``a``."""
    family = Family(family)
    if family in (Family.FAMILY52, Family.FAMILY53):
        xs = range(a - 1, s) if 2 <= a <= s - 1 else range(0)
    elif family is Family.FAMILY57:
        xs = range(1, a + 2) if 1 <= a <= s - 2 else range(0)
    else:
        raise ParameterRangeError(f"{family.value} is not indexed by (s, a, x)")
    return [ConstructionSpec.make(family, s=s, a=a, x=x) for x in xs]


def family_values(
    family, s: int, a: int, capacity: Optional[int] = None
) -> FrozenSet[int]:
    """Predicted r-values a family realises over all admissible ``x``."""
    return frozenset(
        realize(spec, capacity).predicted_r for spec in family_specs(family, s, a)
    )


def maximizer_sets(s: int, N: int, capacity: Optional[int] = None) -> List[IntSet]:
    """The s-sets of ``[1, N]`` with the largest r-value: ``{x, 2x, ..., sx}``."""
    if not 1 <= s <= N:
        raise ParameterRangeError(f"maximizer_sets needs 1 <= s <= N, got s={s}, N={N}")
    return [
        IntSet.of(range(x1, s * x1 + 1, x1), capacity) for x1 in range(1, N // s + 1)
    ]


def minimizer_sets(s: int, N: int, capacity: Optional[int] = None) -> List[IntSet]:
    """The s-sets of ``[1, N]`` with the smallest r-value, for ``2s >= N + 1``."""
    if s > N or 2 * s < N + 1:
        raise ParameterRangeError(
            f"minimizer_sets needs N + 1 <= 2s <= 2N, got s={s}, N={N}"
        )
    sets = [IntSet.interval(N - s + 1, N, capacity)]
    if N % 2 == 1 and 2 * s == N + 1 and s > 1:
        sets.append(IntSet.of(range(1, 2 * (N - s) + 2, 2), capacity))
    return sets


def theorem46_sets(s: int, capacity: Optional[int] = None) -> List[IntSet]:
    """The two s-subsets of ``[1, 2s-1]`` with r-value 1.

    These are all of them for ``s >= 5``. For ``s = 4`` the set ``{2,3,6,7}``
    (``3 + 3 = 6``) has r-value 1 as well and is not returned.
    """
    if s <= 3:
        raise ParameterRangeError(f"theorem46_sets needs s > 3, got s={s}")
    N = 2 * s - 1
    lo = (N - 1) // 2
    return [
        IntSet.interval(lo, N - 1, capacity),
        IntSet.interval(lo, N, capacity).remove((N + 1) // 2),
    ]
