"""Exception types raised by the toolkit.

Every domain failure carries a ``witness`` attribute holding whatever concrete
data exposed the failure (a pair of elements, a condition number, ...).
"""

from __future__ import annotations

from typing import Any


class RRBError(ValueError):
    """Base class for domain errors."""

    def __init__(self, message: str = "", witness: Any = None):
        super().__init__(message)
        self.witness = witness


class NotAGroup(RRBError):
    pass


class NotAHomomorphism(RRBError):
    pass


class NotAnAction(RRBError):
    pass


class NotAbelian(RRBError):
    pass


class SearchBudgetExceeded(RRBError):
    pass


class NotRotaBaxter(RRBError):
    pass


class NotExactFactorization(RRBError):
    pass


class NotRRBHom(RRBError):
    pass


class NotAnIdeal(RRBError):
    pass


class NotABrace(RRBError):
    pass


class SolutionCheckFailed(RRBError):
    pass


class NotGoodTriplet(RRBError):
    pass


class NotAModule(RRBError):
    """``witness`` is ``(condition_number, data)``."""

    @property
    def condition(self) -> int:
        return self.witness[0]


class NotInC0(RRBError):
    pass


class TooLarge(RRBError):
    pass


class NotCentralModule(RRBError):
    pass


class NotExact(RRBError):
    pass


class NotEmbedding(RRBError):
    pass


class NotEpi(RRBError):
    pass


class NotACocycle(RRBError):
    pass


class ActionMismatch(RRBError):
    pass


class NotBijective(RRBError):
    pass


class ConditionFailed(RRBError):
    pass


class NotAnExtension(RRBError):
    pass


class CrossCheckFailed(RRBError):
    """Two independent computations of the same quantity disagreed."""
