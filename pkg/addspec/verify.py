"""
Verification of the statements about r-values and the spectrum ``R(s, N)``.

Each statement id maps to a verifier that checks the statement's set-level
claim over a parameter range, by exhaustive enumeration and by comparing the
closed forms and constructions against direct counting. The outcome is a
:class:`VerificationReport`; a failed check is recorded as a
:class:`Counterexample` carrying the parameters, a witness set where one
exists, and the expected and actual values.

Statement ids
-------------

=============  ==============================================================
``lemma2.2``   the four r-value definitions agree on every s-subset
``lemma2.4``   interval formula (also ``lemma2.5``, ``lemma2.6``, ``lemma2.7``)
``thm3.1``     ``g = s(s-1)/2``, maximizers are ``{x, 2x, ..., sx}``
``cor3.2``     the maximizers are exactly ``maximizer_sets(s, N)``
``thm3.3``     ``f`` equals :func:`~addspec.formulas.f_min`
``thm3.4``     the minimizers are exactly ``minimizer_sets(s, N)``, ``2s > N``
``prop4.4``    0-closed s-sets of ``[1, 2s-1]`` are progressions of step 1 or 2
``prop4.5``    same for ``[1, 2s]`` when ``2s > 8``; the four sets when ``2s = 8``
``n2s``        same for ``[1, 2s]`` for every s (reported, not a theorem)
``thm4.6``     the r = 1 s-sets of ``[1, 2s-1]`` are ``theorem46_sets(s)``; fails
               at s = 4, where ``{2,3,6,7}`` also has r = 1
``thm4.7``     no s-set of ``[1, 2s-2]`` has r = 2
``cor4.8``     no s-set of ``[1, N]`` has r = 2 when ``5 <= N < 2s-1``
``prop5.1``    ``R(s, N)`` contains ``[(s-1)(s-2)/2, s(s-1)/2]`` for ``N > s``
``prop5.2``    family predictions vs counting (also ``prop5.3``, ``prop5.7``)
``prop5.4``    ``R(s, s+a)`` contains the band below ``f(s, s+a-1)``
``thm5.5``     ``R(s, N)`` contains ``[f(s, N-1), g]``
``thm5.6``     ``f + 1`` is missing for ``s+2 <= N <= 2s-2``
``thm5.8``     every missing value is in ``exception_candidates(s, N)``
``thm5.9``     the three regimes of ``R(s, N)``
``conj6.1``    the missing values are exactly ``exception_candidates(s, N)``
=============  ==============================================================
"""

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from loguru import logger as _logger

from addspec.combinations import iter_combinations
from addspec.constructions import (
    ConstructionSpec,
    Family,
    family_specs,
    family_values,
    maximizer_sets,
    minimizer_sets,
    realize,
    theorem46_sets,
)
from addspec.core import DEFAULT_CAPACITY, IntSet, RMethod, r_value_by
from addspec.diffvec import ZeroClosedTag, classify_zero_closed, difference_vector
from addspec.exceptions import (
    BudgetExceededError,
    ClassificationError,
    ParameterRangeError,
    UnknownStatementError,
)
from addspec.formulas import exception_candidates, f_min, g_max
from addspec.spectrum import (
    DEFAULT_BUDGET,
    DEFAULT_EXTREMAL_LIMIT,
    MatchingSets,
    SpectrumResult,
    enumerate_spectrum,
    sets_with_r,
)
from addspec.utils import format_range

FORMULA_GRID_BOUND = 24

# the 0-closed 4-subsets of [1, 8]
ZERO_CLOSED_4_IN_8 = (
    IntSet.of((1, 3, 5, 7)),
    IntSet.of((2, 3, 7, 8)),
    IntSet.of((4, 5, 6, 7)),
    IntSet.of((5, 6, 7, 8)),
)


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    ERRATA = "errata"


@dataclass(frozen=True)
class Counterexample:
    """One failed check.

    ``errata`` marks a disagreement of a published formula outside the range
    where it is known to hold; it does not fail the report.
    """

    parameters: Dict[str, int]
    set: Optional[IntSet]
    expected: Any
    actual: Any
    errata: bool = False

    def to_dict(self) -> dict:
        return {
            "parameters": dict(self.parameters),
            "set": None if self.set is None else list(self.set.members),
            "expected": self.expected,
            "actual": self.actual,
            "errata": self.errata,
        }

    @classmethod
    def from_dict(cls, d: dict, capacity: Optional[int] = None) -> "Counterexample":
        members = d["set"]
        if members is not None:
            capacity = capacity or max([DEFAULT_CAPACITY] + members)
        return cls(
            parameters=dict(d["parameters"]),
            set=None if members is None else IntSet.of(members, capacity),
            expected=d["expected"],
            actual=d["actual"],
            errata=d.get("errata", False),
        )


@dataclass(frozen=True)
class VerificationReport:
    statement_id: str
    parameter_range: str
    status: Status
    counterexamples: Tuple[Counterexample, ...]
    checked: int

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self) -> dict:
        return {
            "statement_id": self.statement_id,
            "parameter_range": self.parameter_range,
            "status": self.status.value,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "checked": self.checked,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(
            statement_id=d["statement_id"],
            parameter_range=d["parameter_range"],
            status=Status(d["status"]),
            counterexamples=tuple(
                Counterexample.from_dict(c) for c in d["counterexamples"]
            ),
            checked=d["checked"],
        )


class _Context:
    """Parameters, caches and findings of one verification run."""

    def __init__(
        self,
        statement_id: str,
        s_range: Iterable[int],
        n_range: Optional[Iterable[int]],
        workers: int,
        budget: int,
        capacity: int,
        extremal_limit: int,
    ):
        self.statement_id = statement_id
        self.s_values = sorted(set(s_range))
        self.n_filter = None if n_range is None else set(n_range)
        self.workers = workers
        self.budget = budget
        self.capacity = capacity
        self.extremal_limit = extremal_limit
        self.checked = 0
        self.counterexamples: List[Counterexample] = []
        self._spectra: Dict[Tuple[int, int], SpectrumResult] = {}
        self._matching: Dict[Tuple[int, int, int, int], MatchingSets] = {}
        self._cells = set()

    # parameter grids

    def sizes(self, least: int = 1) -> List[int]:
        return [s for s in self.s_values if s >= least]

    def bounds(self, lo: int, hi: int) -> List[int]:
        """Interval bounds ``N`` in ``[lo, hi]`` admitted by the N filter."""
        return [
            N
            for N in range(max(lo, 1), hi + 1)
            if N <= self.capacity and (self.n_filter is None or N in self.n_filter)
        ]

    def grid_bound(self) -> int:
        if self.n_filter:
            return min(max(self.n_filter), self.capacity)
        return min(FORMULA_GRID_BOUND, self.capacity)

    # cached scans

    def _count(self, s: int, N: int):
        if (s, N) not in self._cells:
            self._cells.add((s, N))
            self.checked += comb(N, s)

    def spectrum(self, s: int, N: int) -> SpectrumResult:
        key = (s, N)
        if key not in self._spectra:
            self._spectra[key] = enumerate_spectrum(
                s,
                N,
                workers=self.workers,
                budget=self.budget,
                capacity=self.capacity,
                extremal_limit=max(self.extremal_limit, N + 1),
            )
            self._count(s, N)
        return self._spectra[key]

    def matching(
        self, s: int, N: int, r: int, limit: Optional[int] = None
    ) -> MatchingSets:
        limit = self.extremal_limit if limit is None else limit
        key = (s, N, r, limit)
        if key not in self._matching:
            self._matching[key] = sets_with_r(
                s,
                N,
                r,
                limit=limit,
                workers=self.workers,
                budget=self.budget,
                capacity=self.capacity,
            )
            self._count(s, N)
        return self._matching[key]

    def witness(self, s: int, N: int, r: int) -> Optional[IntSet]:
        found = self.matching(s, N, r, limit=1)
        return found.sets[0] if found.sets else None

    # findings

    def fail(self, parameters: Dict[str, int], set_, expected, actual, errata=False):
        cx = Counterexample(dict(parameters), set_, expected, actual, errata)
        level = "errata" if errata else "counterexample"
        _logger.warning(f"{self.statement_id} {level}: {cx.to_dict()}")
        self.counterexamples.append(cx)

    def expect(self, ok: bool, parameters, expected, actual, set_=None):
        if not ok:
            self.fail(parameters, set_, expected, actual)

    def expect_sets(
        self,
        parameters,
        expected: Iterable[IntSet],
        found: Iterable[IntSet],
        total: Optional[int] = None,
    ):
        """Compare two lists of sets; the witness is the lexicographically
        first set found in exactly one of them."""
        expected, found = set(expected), set(found)
        if expected == found and (total is None or total == len(expected)):
            return
        diff = sorted(expected ^ found, key=lambda S: S.members)
        self.fail(
            parameters,
            diff[0] if diff else None,
            _sorted_sets(expected),
            _sorted_sets(found),
        )

    def report(self, parameter_range: str) -> VerificationReport:
        if not self.counterexamples:
            status = Status.PASS
        elif all(c.errata for c in self.counterexamples):
            status = Status.ERRATA
        else:
            status = Status.FAIL
        return VerificationReport(
            statement_id=self.statement_id,
            parameter_range=parameter_range,
            status=status,
            counterexamples=tuple(self.counterexamples),
            checked=self.checked,
        )


_VERIFIERS: Dict[str, Callable[[_Context], None]] = {}


def _verifier(*statement_ids: str):
    def register(fn):
        for sid in statement_ids:
            _VERIFIERS[sid] = fn
        return fn

    return register


def known_statements() -> List[str]:
    return sorted(_VERIFIERS)


def _sorted_sets(sets: Iterable[IntSet]) -> List[List[int]]:
    return sorted(list(S.members) for S in sets)


def _values(values: Iterable[int]) -> List[int]:
    return sorted(values)


# formulas and constructions against counting


def _oracle(S: IntSet) -> int:
    return r_value_by(S, RMethod.PAIR_SUM)


def _check_prediction(ctx: _Context, spec: ConstructionSpec):
    try:
        pred = realize(spec, ctx.capacity)
    except ParameterRangeError:
        return
    actual = _oracle(pred.set)
    ctx.checked += 1
    if actual != pred.predicted_r:
        ctx.fail(
            spec.param_map,
            pred.set,
            pred.predicted_r,
            actual,
            errata=not pred.in_validated_range,
        )


@_verifier("lemma2.2")
def _verify_methods(ctx: _Context):
    methods = list(RMethod)
    for s in ctx.sizes(1):
        for N in ctx.bounds(s, 2 * s + 2):
            for mask in iter_combinations(s, N):
                S = IntSet(mask, ctx.capacity)
                values = [r_value_by(S, m) for m in methods]
                ctx.checked += 1
                if len(set(values)) != 1:
                    ctx.fail(
                        {"s": s, "N": N}, S, values[0], dict(zip(methods, values))
                    )


@_verifier("lemma2.4", "lemma2.5", "lemma2.6", "lemma2.7")
def _verify_lemma_formulas(ctx: _Context):
    L = ctx.grid_bound()
    for s in ctx.sizes(1):
        if ctx.statement_id == "lemma2.4":
            for i in range(1, L - s + 2):
                _check_prediction(ctx, ConstructionSpec.make(Family.INTERVAL, i=i, s=s))
        elif ctx.statement_id == "lemma2.5":
            for a in range(1, L + 1):
                for x in range(1, L - (s - 1) * a + 1):
                    _check_prediction(
                        ctx, ConstructionSpec.make(Family.AP, x=x, a=a, s=s)
                    )
        elif ctx.statement_id == "lemma2.6":
            for x in range(s + 1, L + 1):
                _check_prediction(
                    ctx, ConstructionSpec.make(Family.INTERVAL_PLUS_POINT, s=s, x=x)
                )
        elif s >= 2:
            for i in range(1, L - s + 2):
                for x in range(i, i + s):
                    _check_prediction(
                        ctx,
                        ConstructionSpec.make(
                            Family.INTERVAL_MINUS_POINT, i=i, s=s, x=x
                        ),
                    )


@_verifier("prop5.2", "prop5.3", "prop5.7")
def _verify_families(ctx: _Context):
    family = {
        "prop5.2": Family.FAMILY52,
        "prop5.3": Family.FAMILY53,
        "prop5.7": Family.FAMILY57,
    }[ctx.statement_id]
    for s in ctx.sizes(3):
        for a in range(1, s):
            for spec in family_specs(family, s, a):
                _check_prediction(ctx, spec)


# extremal values


@_verifier("thm3.1", "cor3.2")
def _verify_maximizers(ctx: _Context):
    for s in ctx.sizes(1):
        for N in ctx.bounds(s, 2 * s + 2):
            sp = ctx.spectrum(s, N)
            params = {"s": s, "N": N}
            if ctx.statement_id == "thm3.1":
                ctx.expect(sp.g == g_max(s), params, g_max(s), sp.g)
                for S in sp.max_sets:
                    x1 = S.min()
                    if S.members != tuple(range(x1, s * x1 + 1, x1)):
                        ctx.fail(params, S, "progression {x, 2x, ..., sx}", S.format())
            else:
                expected = maximizer_sets(s, N, ctx.capacity)
                ctx.expect_sets(params, expected, sp.max_sets, sp.max_count)


@_verifier("thm3.3")
def _verify_minimum(ctx: _Context):
    for s in ctx.sizes(1):
        for N in ctx.bounds(s, 2 * s + 2):
            sp = ctx.spectrum(s, N)
            ctx.expect(
                sp.f == f_min(s, N),
                {"s": s, "N": N},
                f_min(s, N),
                sp.f,
                sp.min_sets[0] if sp.min_sets else None,
            )


@_verifier("thm3.4")
def _verify_minimizers(ctx: _Context):
    for s in ctx.sizes(1):
        for N in ctx.bounds(s, 2 * s - 1):
            sp = ctx.spectrum(s, N)
            expected = minimizer_sets(s, N, ctx.capacity)
            ctx.expect_sets({"s": s, "N": N}, expected, sp.min_sets, sp.min_count)


# structure of sets with small r-values


def _step_one_or_two(S: IntSet) -> bool:
    """True iff ``S`` is an arithmetic progression with difference 1 or 2."""
    if len(S) < 2:
        return True
    if len(S) >= 4:
        cls = classify_zero_closed(S)
        return (
            cls.tag is ZeroClosedTag.ARITHMETIC_PROGRESSION
            and cls.parameters["a"] in (1, 2)
        )
    gaps = set(difference_vector(S, 1))
    return len(gaps) == 1 and gaps <= {1, 2}


def _check_zero_closed_progressions(ctx: _Context, s: int, N: int):
    params = {"s": s, "N": N}
    found = ctx.matching(s, N, 0)
    ctx.expect(
        found.total == len(found.sets),
        params,
        f"at most {len(found.sets)} 0-closed sets",
        found.total,
    )
    for S in found.sets:
        try:
            ok = _step_one_or_two(S)
        except ClassificationError as exc:
            ctx.fail(params, S, "progression with difference 1 or 2", str(exc))
            continue
        if not ok:
            cls = classify_zero_closed(S)
            ctx.fail(params, S, "progression with difference 1 or 2", cls.tag.value)


@_verifier("prop4.4")
def _verify_odd_maximum_sum_free(ctx: _Context):
    for s in ctx.sizes(2):
        for N in ctx.bounds(2 * s - 1, 2 * s - 1):
            _check_zero_closed_progressions(ctx, s, N)


@_verifier("prop4.5")
def _verify_even_maximum_sum_free(ctx: _Context):
    for s in ctx.sizes(4):
        for N in ctx.bounds(2 * s, 2 * s):
            if N > 8:
                _check_zero_closed_progressions(ctx, s, N)
                continue
            found = ctx.matching(s, N, 0)
            ctx.expect_sets(
                {"s": s, "N": N}, ZERO_CLOSED_4_IN_8, found.sets, found.total
            )


@_verifier("n2s")
def _verify_even_remark(ctx: _Context):
    for s in ctx.sizes(2):
        for N in ctx.bounds(2 * s, 2 * s):
            _check_zero_closed_progressions(ctx, s, N)


@_verifier("thm4.6")
def _verify_r_one(ctx: _Context):
    for s in ctx.sizes(4):
        for N in ctx.bounds(2 * s - 1, 2 * s - 1):
            found = ctx.matching(s, N, 1)
            expected = theorem46_sets(s, ctx.capacity)
            ctx.expect_sets({"s": s, "N": N}, expected, found.sets, found.total)


def _check_no_r_two(ctx: _Context, s: int, N: int):
    sp = ctx.spectrum(s, N)
    if 2 in sp.attained:
        ctx.fail({"s": s, "N": N}, ctx.witness(s, N, 2), "2 not attained", 2)


@_verifier("thm4.7")
def _verify_no_r_two(ctx: _Context):
    for s in ctx.sizes(4):
        for N in ctx.bounds(2 * s - 2, 2 * s - 2):
            _check_no_r_two(ctx, s, N)


@_verifier("cor4.8")
def _verify_no_r_two_below(ctx: _Context):
    for s in ctx.sizes(1):
        for N in ctx.bounds(max(5, s), 2 * s - 2):
            _check_no_r_two(ctx, s, N)


# the spectrum


def _missing(sp: SpectrumResult, values: Iterable[int]) -> List[int]:
    attained = set(sp.attained)
    return [v for v in values if v not in attained]


@_verifier("prop5.1")
def _verify_top_band(ctx: _Context):
    for s in ctx.sizes(2):
        band = range((s - 1) * (s - 2) // 2, g_max(s) + 1)
        # [1, s+1] minus one point already realises the band
        via_construction = set()
        for x in range(1, s + 2):
            pred = realize(
                ConstructionSpec.make(Family.INTERVAL_MINUS_POINT, i=1, s=s + 1, x=x),
                ctx.capacity,
            )
            via_construction.add(_oracle(pred.set))
            ctx.checked += 1
        missed = [v for v in band if v not in via_construction]
        ctx.expect(not missed, {"s": s}, _values(band), _values(via_construction))
        for N in ctx.bounds(s + 1, 2 * s):
            missed = _missing(ctx.spectrum(s, N), band)
            ctx.expect(not missed, {"s": s, "N": N}, _values(band), missed)


@_verifier("prop5.4")
def _verify_band(ctx: _Context):
    for s in ctx.sizes(3):
        for a in range(2, s):
            for N in ctx.bounds(s + a, s + a):
                lo = (s - a) * (s - a + 1) // 2
                hi = (s - a + 1) * (s - a + 2) // 2 - 1
                band = range(lo, hi + 1)
                reached = family_values(Family.FAMILY52, s, a, ctx.capacity)
                reached |= family_values(Family.FAMILY53, s, a, ctx.capacity)
                _logger.debug(
                    f"s={s} a={a}: families predict {len(reached & set(band))} "
                    f"of {len(band)} band values"
                )
                missed = _missing(ctx.spectrum(s, N), band)
                ctx.expect(
                    not missed,
                    {"s": s, "a": a, "N": N},
                    list(range(lo, hi + 1)),
                    missed,
                )


@_verifier("thm5.5")
def _verify_previous_range(ctx: _Context):
    for s in ctx.sizes(1):
        for N in ctx.bounds(s + 1, 2 * s):
            band = range(f_min(s, N - 1), g_max(s) + 1)
            missed = _missing(ctx.spectrum(s, N), band)
            ctx.expect(not missed, {"s": s, "N": N}, _values(band), missed)


@_verifier("thm5.6")
def _verify_first_gap(ctx: _Context):
    for s in ctx.sizes(2):
        for N in ctx.bounds(s + 2, 2 * s - 2):
            sp = ctx.spectrum(s, N)
            params = {"s": s, "N": N}
            ctx.expect(sp.f == f_min(s, N), params, f_min(s, N), sp.f)
            if sp.f + 1 in sp.attained:
                ctx.fail(
                    params, ctx.witness(s, N, sp.f + 1), "f + 1 not attained", sp.f + 1
                )


@_verifier("thm5.8")
def _verify_exception_bound(ctx: _Context):
    for s in ctx.sizes(2):
        for N in ctx.bounds(s + 2, 2 * s - 2):
            sp = ctx.spectrum(s, N)
            allowed = exception_candidates(s, N)
            extra = [v for v in sp.exceptions if v not in allowed]
            ctx.expect(
                not extra, {"s": s, "N": N}, _values(allowed), list(sp.exceptions)
            )


@_verifier("thm5.9")
def _verify_trichotomy(ctx: _Context):
    for s in ctx.sizes(2):
        for N in ctx.bounds(s, 2 * s + 2):
            sp = ctx.spectrum(s, N)
            params = {"s": s, "N": N}
            f, g = f_min(s, N), g_max(s)
            ctx.expect((sp.f, sp.g) == (f, g), params, [f, g], [sp.f, sp.g])
            if s + 2 <= N <= 2 * s - 2:
                allowed = exception_candidates(s, N)
                ctx.expect(
                    sp.f + 1 in sp.exceptions
                    and set(sp.exceptions) <= allowed,
                    params,
                    _values(allowed),
                    list(sp.exceptions),
                )
            else:
                ctx.expect(
                    list(sp.attained) == list(range(f, g + 1)),
                    params,
                    [f, g],
                    list(sp.exceptions),
                )


def _compare_exceptions(ctx: _Context, s: int, N: int):
    sp = ctx.spectrum(s, N)
    predicted = exception_candidates(s, N)
    _logger.info(
        f"R({s},{N}): exceptions {list(sp.exceptions)}, predicted {_values(predicted)}"
    )
    if set(sp.exceptions) != predicted:
        attained_predictions = [v for v in sorted(predicted) if v in sp.attained]
        witness = (
            ctx.witness(s, N, attained_predictions[0]) if attained_predictions else None
        )
        ctx.fail({"s": s, "N": N}, witness, _values(predicted), list(sp.exceptions))


@_verifier("conj6.1")
def _verify_conjecture(ctx: _Context):
    for s in ctx.sizes(4):
        for N in ctx.bounds(s + 2, 2 * s - 2):
            _compare_exceptions(ctx, s, N)


def _describe(s_values: List[int], n_range: Optional[Iterable[int]]) -> str:
    text = f"s={format_range(s_values)}"
    if n_range is not None:
        text += f", N={format_range(n_range)}"
    return text


def verify_statement(
    statement_id: str,
    s_range: Iterable[int],
    workers: int = 1,
    n_range: Optional[Iterable[int]] = None,
    budget: int = DEFAULT_BUDGET,
    capacity: int = DEFAULT_CAPACITY,
    extremal_limit: int = DEFAULT_EXTREMAL_LIMIT,
) -> VerificationReport:
    """Check one statement over a range of set sizes.

    Args:
        statement_id: one of :func:`known_statements`
        s_range: set sizes to check
        workers: worker processes per enumeration
        n_range: restrict the interval bounds ``N``; each statement has its own
            default grid
        budget: largest scan allowed per ``(s, N)`` cell
        capacity: representation bound
        extremal_limit: number of extremal sets kept per scan

    Raises:
        UnknownStatementError: no verifier for ``statement_id``
        ParameterRangeError: the ranges contain no cell of the statement
        BudgetExceededError: a cell of the grid exceeds ``budget``
    """
    sid = statement_id.strip().lower()
    if sid not in _VERIFIERS:
        raise UnknownStatementError(statement_id, known_statements())
    ctx = _Context(sid, s_range, n_range, workers, budget, capacity, extremal_limit)
    _logger.info(f"Verifying {sid} for {_describe(ctx.s_values, n_range)}")
    _VERIFIERS[sid](ctx)
    if not ctx.checked:
        raise ParameterRangeError(
            f"{sid}: nothing to check for {_describe(ctx.s_values, n_range)}"
        )
    report = ctx.report(_describe(ctx.s_values, n_range))
    _logger.info(f"{sid}: {report.status.value} ({report.checked} checked)")
    return report


def conjecture_scan(
    s_max: int,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    capacity: int = DEFAULT_CAPACITY,
) -> VerificationReport:
    """Compare the exceptions of ``R(s, N)`` with the predicted odd ladder for
    all ``4 <= s <= s_max`` and ``s + 2 <= N <= 2s - 2``.

    A mismatch is a counterexample to the conjectured exact description and
    makes the report fail.
    """
    if s_max < 4:
        raise ParameterRangeError(f"conjecture scan needs s_max >= 4, got {s_max}")
    for s in range(4, s_max + 1):
        for N in range(s + 2, 2 * s - 1):
            if comb(N, s) > budget:
                raise BudgetExceededError(comb(N, s), budget, f"R({s},{N})")
    return verify_statement(
        "conj6.1",
        range(4, s_max + 1),
        workers=workers,
        budget=budget,
        capacity=capacity,
    )
