"""
Error types reported by the permutation pattern toolkit.
"""

from enum import Enum


class ErrorType(Enum):
    """
    The type of an error, consisting of an error code and a brief string describing the type.
    :ivar error_code: an integer error code.
    :ivar error_type: a brief string describing the error type.
    """

    INVALID_INPUT = (10000, "Invalid input")
    """ A permutation, partition, composition or index set could not be parsed or is malformed. """

    LIMIT_EXCEEDED = (10010, "Size limit exceeded")
    """ The request asks for an object or a computation larger than the configured limits. """

    PRECONDITION_FAILED = (20000, "Precondition failed")
    """ An operation was applied outside of its domain. """

    PATTERN_CONTAINED = (20010, "Input contains the forbidden pattern")
    """ The input permutation was required to avoid a pattern but contains it. """

    TOO_MANY_INVERSIONS = (20020, "Too many inversions")
    """ The input permutation has too many inversions for the requested bijection. """

    OUT_OF_HYPOTHESIS = (20030, "Outside the proposition's hypothesis")
    """ No polynomial profile is predicted for the requested pattern and inversion count. """

    COUNT_OVERFLOW = (30000, "Count overflow")
    """ An exact count exceeded the supported count width. """

    CHECK_FAILED = (40000, "Check failed")
    """ A lemma or conjecture harness found violations. """

    REQUEST_VALIDATION_FAILED = (50010, "Request validation failed")
    """ A request to a service failed validation of the request. """

    def __init__(self, error_code, error_type):
        self.error_code = error_code
        self.error_type = error_type
