"""Tests for the argument checker module."""

import pytest

from src.service.arg_checkers import COUNT_LIMIT, at_most, checked_count, non_negative
from src.service.exceptions import CountOverflowError, InvalidInputError, LimitExceededError


def test_non_negative():
    assert non_negative(0, "n") == 0
    with pytest.raises(InvalidInputError, match="n must be non-negative, got -1"):
        non_negative(-1, "n")


def test_at_most():
    assert at_most(10, 10, "nmax") == 10
    with pytest.raises(LimitExceededError, match="nmax must be at most 10, got 11"):
        at_most(11, 10, "nmax")


def test_checked_count():
    assert checked_count(COUNT_LIMIT) == COUNT_LIMIT
    assert COUNT_LIMIT == 2**128 - 1
    with pytest.raises(CountOverflowError, match="p\\(5000\\) does not fit in 128 bits"):
        checked_count(COUNT_LIMIT + 1, "p(5000)")
    with pytest.raises(CountOverflowError):
        checked_count(-1)
