"""
Argument checks shared by the toolkit modules, including checked count arithmetic.
"""

from src.service.exceptions import CountOverflowError, InvalidInputError, LimitExceededError

# Counts are exact integers restricted to an unsigned 128-bit width.
COUNT_BITS = 128
COUNT_LIMIT = (1 << COUNT_BITS) - 1


def non_negative(value: int, name: str) -> int:
    """
    Check an integer argument is at least zero.

    returns the value.
    """
    if value < 0:
        raise InvalidInputError(f"{name} must be non-negative, got {value}")
    return value


def at_most(value: int, limit: int, name: str) -> int:
    """
    Check an integer argument does not exceed a supported limit.

    returns the value.
    """
    if value > limit:
        raise LimitExceededError(f"{name} must be at most {limit}, got {value}")
    return value


def checked_count(value: int, what: str = "count") -> int:
    """
    Check an exact count fits the supported count width.

    value - the count.
    what - a description of the count for the error message.

    returns the count.
    """
    if value < 0 or value > COUNT_LIMIT:
        raise CountOverflowError(f"{what} does not fit in {COUNT_BITS} bits")
    return value
