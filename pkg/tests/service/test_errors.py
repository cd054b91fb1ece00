"""Tests for the error types."""

from src.service.errors import ErrorType


def test_error_codes_are_unique():
    codes = [e.error_code for e in ErrorType]
    assert len(codes) == len(set(codes))


def test_error_type_fields():
    assert ErrorType.INVALID_INPUT.error_code == 10000
    assert ErrorType.INVALID_INPUT.error_type == "Invalid input"
    assert ErrorType.CHECK_FAILED.error_code == 40000
