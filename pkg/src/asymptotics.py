"""
Eventual polynomiality of the columns n -> s_{n,k}(tau).

A column is eventually polynomial for every pattern. Its degree is r - 1 for a Fibonacci
pattern with r >= 1 inversions and k >= r, and k for any other pattern, where the
polynomial starts n^k/k!. Identity patterns have columns that are eventually zero.

Dividing a column by the number of all permutations with k inversions gives the share
that avoids tau. It tends to 0 for a Fibonacci tau with k >= inv(tau) and to 1 otherwise.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from src.enumeration import column_values, count_avoiders, count_by_core, mahonian_count
from src.partitions import partition_count, q_count
from src.perms import Perm, core_padding, decreasing, inversions, is_fibonacci, is_identity
from src.service.arg_checkers import non_negative
from src.service.config import get_settings
from src.service.exceptions import InvalidInputError, OutOfHypothesisError, PreconditionError
from src.service.models import (
    CoreCount,
    PolyFitModel,
    ProfileExpectationModel,
    ProfileReport,
    RatioPoint,
    RatioReport,
)

logger = logging.getLogger(__name__)


class ProfileClass(str, Enum):
    IDENTITY = "identity-pattern"
    FIBONACCI = "fibonacci"
    NON_FIBONACCI = "non-fibonacci"


@dataclass(frozen=True, slots=True)
class PolyFit:
    """
    A polynomial with exact rational coefficients, leading first, that reproduces a
    sequence from index `stabilization_point` on. The zero polynomial has degree 0.
    """

    degree: int
    coefficients: tuple[Fraction, ...]
    stabilization_point: int
    is_zero: bool

    @property
    def leading(self) -> Fraction:
        return self.coefficients[0]

    def evaluate(self, n: int) -> Fraction:
        value = Fraction(0)
        for c in self.coefficients:
            value = value * n + c
        return value

    def to_model(self) -> PolyFitModel:
        return PolyFitModel(
            degree=self.degree,
            coefficients=[str(c) for c in self.coefficients],
            stabilization_point=self.stabilization_point,
            is_zero=self.is_zero,
        )


def _differences(row: Sequence[Fraction]) -> list[Fraction]:
    return [b - a for a, b in zip(row, row[1:])]


def _poly_mul_linear(poly: list[Fraction], root: int) -> list[Fraction]:
    # poly is lowest degree first; multiply by (x - root).
    out = [Fraction(0)] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i + 1] += c
        out[i] -= c * root
    return out


def _newton_to_monomial(base: int, forward: Sequence[Fraction]) -> list[Fraction]:
    """
    Expand sum_j forward[j] * C(x - base, j) into monomial coefficients, lowest first.
    """
    result = [Fraction(0)] * len(forward)
    basis = [Fraction(1)]
    for j, delta in enumerate(forward):
        scale = delta / factorial(j)
        for i, c in enumerate(basis):
            result[i] += scale * c
        basis = _poly_mul_linear(basis, base + j)
    return result


def poly_detect(seq: Sequence[int], window: int | None = None, start: int = 1) -> PolyFit | None:
    """
    Fit the tail of a sequence with a polynomial.

    seq - seq[i] is the value at n = start + i.
    window - how many trailing d-th differences must agree before degree d is accepted;
        defaults to the configured value.
    start - the index of the first term.

    Returns the fit of least degree whose d-th differences are constant over the last
    `window` values, or None if the data is too short for any degree. The stabilization
    point is the least n from which the polynomial matches every remaining term.
    """
    window = get_settings().poly_window if window is None else window
    if window < 2:
        raise InvalidInputError(f"window must be at least 2, got {window}")
    values = [Fraction(v) for v in seq]
    row = values
    degree = 0
    while len(row) >= window:
        tail = row[-window:]
        if all(t == tail[0] for t in tail):
            break
        row = _differences(row)
        degree += 1
    else:
        logger.debug("No polynomial tail in %d terms with window %d", len(values), window)
        return None

    base_index = len(values) - 1 - degree
    forward = [values[base_index]]
    current = values[base_index:]
    for _ in range(degree):
        current = _differences(current)
        forward.append(current[0])
    coefficients = list(reversed(_newton_to_monomial(start + base_index, forward)))
    while len(coefficients) > 1 and coefficients[0] == 0:
        coefficients.pop(0)
    is_zero = coefficients == [0]

    fit = PolyFit(len(coefficients) - 1, tuple(coefficients), 0, is_zero)
    first = len(values)
    while first > 0 and fit.evaluate(start + first - 1) == values[first - 1]:
        first -= 1
    return PolyFit(fit.degree, fit.coefficients, start + first, is_zero)


@dataclass(frozen=True, slots=True)
class ProfileExpectation:
    """
    The predicted shape of s_{n,k}(tau) for large n. `expected_leading` is None when no
    value is predicted; identity patterns carry the length past which the column is zero.
    """

    profile_class: ProfileClass
    expected_degree: int | None = None
    expected_leading: Fraction | None = None
    zero_threshold: int | None = None
    in_hypothesis: bool = True

    def to_model(self) -> ProfileExpectationModel:
        return ProfileExpectationModel(
            profile_class=self.profile_class.value,
            expected_degree=self.expected_degree,
            expected_leading=None if self.expected_leading is None else str(self.expected_leading),
            zero_threshold=self.zero_threshold,
            in_hypothesis=self.in_hypothesis,
        )


def es_zero_threshold(length: int, k: int) -> int:
    """s_{n,k}(12...length) = 0 for every n above this value."""
    return (length - 1) * (k + 1)


def _known_constant(tau: Perm, k: int) -> Fraction | None:
    # Columns of a single 21 padded by at most one 1 on each side are constant for k < n - 1.
    decomposition = core_padding(tau)
    if decomposition.core != (decreasing(2),):
        return None
    before, after = decomposition.profile
    if before + after == 0:
        return Fraction(0)
    if before + after == 1:
        return Fraction(partition_count(k))
    if before == after == 1:
        return Fraction(q_count(k))
    return None


def expected_profile(tau: Perm, k: int) -> ProfileExpectation:
    if len(tau) == 0:
        raise InvalidInputError("The empty pattern has no avoiders")
    non_negative(k, "k")
    if is_identity(tau):
        return ProfileExpectation(
            ProfileClass.IDENTITY,
            expected_degree=0,
            expected_leading=Fraction(0),
            zero_threshold=es_zero_threshold(len(tau), k),
        )
    if is_fibonacci(tau):
        r = inversions(tau)
        if k < r:
            return ProfileExpectation(ProfileClass.FIBONACCI, in_hypothesis=False)
        return ProfileExpectation(
            ProfileClass.FIBONACCI,
            expected_degree=r - 1,
            expected_leading=_known_constant(tau, k) if r == 1 else None,
        )
    return ProfileExpectation(
        ProfileClass.NON_FIBONACCI,
        expected_degree=k,
        expected_leading=Fraction(1, factorial(k)),
    )


def _verdict(values: list[int], fit: PolyFit | None, expectation: ProfileExpectation) -> str:
    if not expectation.in_hypothesis:
        return "out-of-hypothesis"
    if fit is None:
        return "no-fit"
    if expectation.profile_class is ProfileClass.IDENTITY:
        past = values[expectation.zero_threshold:]
        return "match" if fit.is_zero and not any(past) else "mismatch"
    if fit.degree != expectation.expected_degree:
        return "mismatch"
    if expectation.expected_leading is not None and fit.leading != expectation.expected_leading:
        return "mismatch"
    return "match"


def verify_profile(
    tau: Perm, k: int, n_max: int, window: int | None = None, jobs: int | None = None
) -> ProfileReport:
    """Fit the column s_{n,k}(tau) for n = 1..n_max and compare it with the prediction."""
    expectation = expected_profile(tau, k)
    values = column_values(tau, k, n_max, jobs=jobs)
    fit = poly_detect(values, window)
    verdict = _verdict(values, fit, expectation)
    logger.info("Profile of %s at k=%d up to n=%d: %s", tau, k, n_max, verdict)
    return ProfileReport(
        pattern=str(tau),
        k=k,
        n_max=n_max,
        values=values,
        fit=None if fit is None else fit.to_model(),
        expectation=expectation.to_model(),
        verdict=verdict,
    )


def dichotomy_ratio(tau: Perm, k: int, n: int) -> Fraction:
    """s_{n,k}(tau) / s_{n,k}: the share of permutations with k inversions that avoid tau."""
    non_negative(n, "n")
    total = mahonian_count(n, k)
    if total == 0:
        raise PreconditionError(f"No permutation of length {n} has {k} inversions")
    avoiding = column_values(tau, k, n)[-1] if n > 0 else count_avoiders(tau, 0)
    return Fraction(avoiding, total)



def dichotomy_limit(tau: Perm, k: int) -> Fraction:
    """The limit of dichotomy_ratio as n grows: 0 for a Fibonacci tau with k >= inv(tau), else 1."""
    if is_fibonacci(tau) and k >= inversions(tau):
        return Fraction(0)
    return Fraction(1)


def fibonacci_lower_bound(n: int, k: int, r: int) -> int:
    """
    C(n - k, r - 1): the number of permutations of length n whose core is
    ((k-r+3)12...(k-r+2), 21, ..., 21). Each has k inversions and avoids every Fibonacci
    pattern with r inversions.
    """
    if r < 2 or k < r:
        raise OutOfHypothesisError(
            f"The lower bound needs r >= 2 and k >= r, got r = {r}, k = {k}"
        )
    if n < k:
        return 0
    return comb(n - k, r - 1)


def _trend(ratios: Sequence[Fraction]) -> str:
    pairs = list(zip(ratios, ratios[1:]))
    if all(a == b for a, b in pairs):
        return "constant"
    if all(a >= b for a, b in pairs):
        return "decreasing"
    if all(a <= b for a, b in pairs):
        return "increasing"
    return "mixed"


def ratio_report(tau: Perm, k: int, n_max: int, jobs: int | None = None) -> RatioReport:
    """
    The avoiding share s_{n,k}(tau) / s_{n,k} for every n <= n_max that has permutations
    with k inversions, next to its limit. Fibonacci patterns with r >= 2 inversions also get
    the lower bound C(n - k, r - 1), and the avoiders of length n_max are grouped by core.
    """
    if len(tau) == 0:
        raise InvalidInputError("The empty pattern has no avoiders")
    non_negative(k, "k")
    if n_max < 1:
        raise InvalidInputError(f"n_max must be positive, got {n_max}")
    r = inversions(tau)
    with_lower_bound = is_fibonacci(tau) and r >= 2 and k >= r
    values = column_values(tau, k, n_max, jobs=jobs)
    points, ratios = [], []
    for n, avoiding in enumerate(values, start=1):
        total = mahonian_count(n, k)
        if total == 0:
            continue
        ratio = Fraction(avoiding, total)
        ratios.append(ratio)
        points.append(
            RatioPoint(
                n=n,
                avoiders=avoiding,
                total=total,
                ratio=str(ratio),
                value=float(ratio),
                lower_bound=fibonacci_lower_bound(n, k, r) if with_lower_bound else None,
            )
        )
    cores = [
        CoreCount(core=[str(block) for block in core], count=count)
        for core, count in count_by_core(tau, n_max, k).items()
    ]
    trend = _trend(ratios)
    limit = dichotomy_limit(tau, k)
    logger.info("Avoiding share of %s at k=%d up to n=%d: %s toward %s", tau, k, n_max, trend, limit)
    return RatioReport(
        pattern=str(tau),
        k=k,
        n_max=n_max,
        profile_class=expected_profile(tau, k).profile_class.value,
        limit=str(limit),
        trend=trend,
        points=points,
        cores=cores,
    )
