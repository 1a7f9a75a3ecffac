"""Exception types shared across the package."""

from __future__ import annotations


class HypothesisError(ValueError):
    """Raised when k fails the standing hypotheses (4 | k, or D not squarefree)."""


class CriterionUnsupportedError(ValueError):
    """Raised when a detection criterion is asked about a (k, p) pair it does not cover."""


class FactorizationBudgetError(RuntimeError):
    """Factoring ran out of budget before finishing.

    `cofactor` is the composite piece left over; `partial` holds the
    (prime, exponent) pairs that were extracted before giving up.
    """

    def __init__(self, message: str, *, cofactor: int, partial: tuple = ()):
        super().__init__(message)
        self.cofactor = cofactor
        self.partial = partial


class InconsistencyError(RuntimeError):
    """The detection criteria disagreed on some (k, p). Should never happen.

    Carries the offending classification in `classification` so callers can
    report exactly which criterion broke ranks.
    """

    def __init__(self, message: str, *, classification=None):
        super().__init__(message)
        self.classification = classification
