"""Tests for the error mapping module."""

import pytest

from src.service.error_mapping import (
    EXIT_CHECK_FAILED,
    EXIT_INTERNAL,
    EXIT_USAGE,
    map_error,
)
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


@pytest.mark.parametrize(
    "exc,err_type,http_code,exit_code",
    [
        (InvalidInputError(), ErrorType.INVALID_INPUT, 400, EXIT_USAGE),
        (LimitExceededError(), ErrorType.LIMIT_EXCEEDED, 400, EXIT_USAGE),
        (PatternContainmentError(), ErrorType.PATTERN_CONTAINED, 422, EXIT_USAGE),
        (TooManyInversionsError(), ErrorType.TOO_MANY_INVERSIONS, 422, EXIT_USAGE),
        (OutOfHypothesisError(), ErrorType.OUT_OF_HYPOTHESIS, 422, EXIT_USAGE),
        (PreconditionError(), ErrorType.PRECONDITION_FAILED, 422, EXIT_USAGE),
        (CountOverflowError(), ErrorType.COUNT_OVERFLOW, 500, EXIT_INTERNAL),
        (CheckFailedError(), ErrorType.CHECK_FAILED, 422, EXIT_CHECK_FAILED),
        (PermKitError(), None, 500, EXIT_INTERNAL),
    ],
)
def test_map_error(exc, err_type, http_code, exit_code):
    assert tuple(map_error(exc)) == (err_type, http_code, exit_code)


def test_unmapped_subclass_uses_parent():
    class NarrowPreconditionError(PreconditionError):
        pass

    assert map_error(NarrowPreconditionError()).err_type == ErrorType.PRECONDITION_FAILED
