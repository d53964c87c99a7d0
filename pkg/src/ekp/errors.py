"""Exception types shared across the package."""

from __future__ import annotations


class EkpError(Exception):
    """Base class for all errors raised by this package."""


class BadParameter(EkpError):
    """Inputs violate a documented precondition."""


class CapacityExceeded(EkpError):
    """Instance is larger than the supported desk-scale limits."""


class IncompatibleRadicand(EkpError):
    """Arithmetic attempted between surds over distinct radicands."""


class UnsupportedExpression(EkpError):
    """Expression is outside the polynomial fragment the certifier handles."""


class InvariantViolation(EkpError):
    """An internal consistency check failed; indicates a bug or bad input."""


class BudgetExceeded(EkpError):
    """Search node budget exhausted before an exact answer was proven.

    Carries the best bracketing bounds found so far.
    """

    def __init__(self, message: str, lower: int, upper: int) -> None:
        super().__init__(f"{message} (bounds: [{lower}, {upper}])")
        self.lower = lower
        self.upper = upper
