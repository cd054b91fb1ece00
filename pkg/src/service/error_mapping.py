"""
Map errors from exception type to custom error type, HTTP status and CLI exit code.
"""

from typing import NamedTuple

from fastapi import status

from src.service.errors import ErrorType
from src.service.exceptions import (
    CheckFailedError,
    CountOverflowError,
    InvalidInputError,
    LimitExceededError,
    OutOfHypothesisError,
    PatternContainmentError,
    PermKitError,
    PreconditionError,
    TooManyInversionsError,
)

_H400 = status.HTTP_400_BAD_REQUEST
_H422 = status.HTTP_422_UNPROCESSABLE_ENTITY
_H500 = status.HTTP_500_INTERNAL_SERVER_ERROR

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_CHECK_FAILED = 3


class ErrorMapping(NamedTuple):
    """The application error type, HTTP status code and CLI exit code for an exception."""

    err_type: ErrorType | None
    """ The type of application error. None if a 5XX error. """
    http_code: int
    """ The HTTP code of the error. """
    exit_code: int
    """ The process exit code used by the command line front end. """


_ERR_MAP = {
    InvalidInputError: ErrorMapping(ErrorType.INVALID_INPUT, _H400, EXIT_USAGE),
    LimitExceededError: ErrorMapping(ErrorType.LIMIT_EXCEEDED, _H400, EXIT_USAGE),
    PatternContainmentError: ErrorMapping(ErrorType.PATTERN_CONTAINED, _H422, EXIT_USAGE),
    TooManyInversionsError: ErrorMapping(ErrorType.TOO_MANY_INVERSIONS, _H422, EXIT_USAGE),
    OutOfHypothesisError: ErrorMapping(ErrorType.OUT_OF_HYPOTHESIS, _H422, EXIT_USAGE),
    PreconditionError: ErrorMapping(ErrorType.PRECONDITION_FAILED, _H422, EXIT_USAGE),
    CountOverflowError: ErrorMapping(ErrorType.COUNT_OVERFLOW, _H500, EXIT_INTERNAL),
    CheckFailedError: ErrorMapping(ErrorType.CHECK_FAILED, _H422, EXIT_CHECK_FAILED),
    PermKitError: ErrorMapping(None, _H500, EXIT_INTERNAL),
}


def map_error(err: PermKitError) -> ErrorMapping:
    """
    Map an error to an optional error type, a HTTP code and an exit code.

    Subclasses without their own entry inherit the mapping of the nearest mapped ancestor.
    """
    for cls in type(err).__mro__:
        mapping = _ERR_MAP.get(cls)
        if mapping:
            return mapping
    return ErrorMapping(None, _H500, EXIT_INTERNAL)
