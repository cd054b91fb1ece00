"""
Exceptions thrown by the permutation pattern toolkit.
"""


class PermKitError(Exception):
    """
    The super class of all toolkit related errors.
    """


class InvalidInputError(PermKitError):
    """
    An error thrown when an input cannot be parsed or violates the invariants of its type.
    """


class LimitExceededError(PermKitError):
    """
    An error thrown when an input or a requested computation exceeds the supported size.
    """


class PreconditionError(PermKitError):
    """
    Super class for errors raised when an operation is applied outside of its domain.
    """


class PatternContainmentError(PreconditionError):
    """
    An error thrown when a permutation that must avoid a pattern contains it.
    """


class TooManyInversionsError(PreconditionError):
    """
    An error thrown when a permutation has too many inversions for a bijection.
    """


class OutOfHypothesisError(PreconditionError):
    """
    An error thrown when no asymptotic profile is predicted for a pattern and inversion count.
    """


class CountOverflowError(PermKitError):
    """
    An error thrown when an exact count exceeds the supported count width.
    """


class CheckFailedError(PermKitError):
    """
    An error thrown when a harness found violations and the caller asked for a hard failure.
    """
