"""Exceptions raised by :mod:`addspec`."""

from typing import Any, Dict, Optional


class AddSpecError(Exception):
    """Base class for all errors raised by this package."""


class ParameterRangeError(AddSpecError, ValueError):
    """Parameters lie outside the range an operation is defined for."""


class FormulaDomainError(ParameterRangeError):
    """A closed-form formula was evaluated outside its stated hypothesis.

    Args:
        formula: identifier of the formula, e.g. ``"interval_plus_point_r"``
        parameters: the offending parameter values
        constraint: human readable description of the violated precondition
    """

    def __init__(self, formula: str, parameters: Dict[str, int], constraint: str):
        self.formula = formula
        self.parameters = dict(parameters)
        self.constraint = constraint
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        super().__init__(f"{formula}({params}): requires {constraint}")


class CapacityError(AddSpecError, ValueError):
    """A member or bound does not fit the representation capacity."""


class BudgetExceededError(AddSpecError):
    """An exhaustive scan would visit more subsets than the configured budget."""

    def __init__(self, total: int, budget: int, what: str = "scan"):
        self.total = total
        self.budget = budget
        super().__init__(
            f"{what} needs {total} subsets which exceeds the budget of {budget}"
        )


class ClassificationError(AddSpecError):
    """A 0-closed set with a small difference set matches no known form."""

    def __init__(self, members: Any, reason: str):
        self.members = members
        super().__init__(f"cannot classify {members}: {reason}")


class UnknownStatementError(AddSpecError, LookupError):
    """The requested statement id has no verifier."""

    def __init__(self, statement_id: str, known: Optional[list] = None):
        self.statement_id = statement_id
        msg = f"unknown statement '{statement_id}'"
        if known:
            msg += f" (known: {', '.join(known)})"
        super().__init__(msg)


class ConfigError(AddSpecError):
    """Configuration file or environment could not be interpreted."""


class RecordError(AddSpecError):
    """A run record could not be written or decoded."""
