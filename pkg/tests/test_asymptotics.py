"""Tests for the asymptotics module."""

from fractions import Fraction
from itertools import permutations
from math import comb

import pytest

from src.asymptotics import (
    PolyFit,
    ProfileClass,
    dichotomy_limit,
    dichotomy_ratio,
    es_zero_threshold,
    expected_profile,
    fibonacci_lower_bound,
    poly_detect,
    ratio_report,
    verify_profile,
)
from src.enumeration import column_values
from src.perms import Perm, identity, is_fibonacci
from src.service.exceptions import InvalidInputError, OutOfHypothesisError, PreconditionError


def P(text: str) -> Perm:
    return Perm.parse(text)


def test_poly_detect_linear():
    fit = poly_detect([0, 1, 2, 3, 4, 5], window=3)
    assert fit.degree == 1
    assert fit.coefficients == (1, -1)
    assert fit.stabilization_point == 1
    assert not fit.is_zero


def test_poly_detect_quadratic_with_offset_start():
    fit = poly_detect([4, 9, 16, 25, 36], window=3, start=2)
    assert fit.coefficients == (1, 0, 0)
    assert fit.stabilization_point == 2
    assert fit.evaluate(7) == 49


def test_poly_detect_finds_stabilization_point():
    fit = poly_detect([0, 0, 2, 2, 2, 2], window=3)
    assert fit.degree == 0
    assert fit.leading == 2
    assert fit.stabilization_point == 3


def test_poly_detect_zero_polynomial():
    fit = poly_detect([5, 0, 0, 0], window=3)
    assert fit.is_zero
    assert fit.degree == 0
    assert fit.coefficients == (0,)
    assert fit.stabilization_point == 2


def test_poly_detect_rational_coefficients():
    values = [(n * n - n - 2) // 2 for n in range(2, 9)]
    fit = poly_detect(values, window=3, start=2)
    assert fit.coefficients == (Fraction(1, 2), Fraction(-1, 2), -1)
    assert fit.to_model().coefficients == ["1/2", "-1/2", "-1"]


def test_poly_detect_without_enough_data():
    assert poly_detect([1, 2], window=3) is None
    assert poly_detect([1, 2, 4, 8, 16, 32], window=3) is None
    with pytest.raises(InvalidInputError):
        poly_detect([1, 1, 1], window=1)


def test_poly_fit_evaluate():
    fit = PolyFit(2, (Fraction(1, 2), Fraction(1, 2), Fraction(0)), 1, False)
    assert [fit.evaluate(n) for n in range(1, 5)] == [1, 3, 6, 10]


def test_expected_profile():
    identity_profile = expected_profile(identity(3), 1)
    assert identity_profile.profile_class is ProfileClass.IDENTITY
    assert identity_profile.zero_threshold == 4

    fib = expected_profile(P("132"), 4)
    assert fib.profile_class is ProfileClass.FIBONACCI
    assert (fib.expected_degree, fib.expected_leading) == (0, 5)
    assert expected_profile(P("1324"), 3).expected_leading == 10
    assert expected_profile(P("2143"), 3).expected_degree == 1
    assert expected_profile(P("2143"), 3).expected_leading is None
    assert not expected_profile(P("2143"), 1).in_hypothesis

    other = expected_profile(P("231"), 3)
    assert other.profile_class is ProfileClass.NON_FIBONACCI
    assert (other.expected_degree, other.expected_leading) == (3, Fraction(1, 6))

    with pytest.raises(InvalidInputError):
        expected_profile(Perm(()), 1)
    with pytest.raises(InvalidInputError):
        expected_profile(P("21"), -1)


def test_expectation_model():
    model = expected_profile(P("231"), 2).to_model()
    assert model.profile_class == "non-fibonacci"
    assert model.expected_leading == "1/2"


def test_es_zero_threshold():
    assert es_zero_threshold(3, 1) == 4
    assert es_zero_threshold(2, 0) == 1


def test_verify_profile_non_fibonacci():
    report = verify_profile(P("321"), 1, 6, window=3, jobs=1)
    assert report.values == [0, 1, 2, 3, 4, 5]
    assert report.fit.coefficients == ["1", "-1"]
    assert report.verdict == "match"

    report = verify_profile(P("321"), 2, 8, window=3, jobs=1)
    assert report.fit.degree == 2
    assert report.fit.coefficients[0] == "1/2"
    assert report.fit.stabilization_point == 2
    assert report.verdict == "match"


def test_verify_profile_fibonacci():
    report = verify_profile(P("132"), 2, 8, window=3, jobs=1)
    assert report.fit.coefficients == ["2"]
    assert report.fit.stabilization_point == 3
    assert report.verdict == "match"
    report = verify_profile(P("1324"), 2, 8, window=3, jobs=1)
    assert report.fit.coefficients == ["5"]
    assert report.verdict == "match"


def test_verify_profile_identity():
    report = verify_profile(P("123"), 1, 8, window=3, jobs=1)
    assert report.values[:4] == [0, 1, 2, 0]
    assert report.fit.is_zero
    assert report.fit.stabilization_point == 4
    assert report.verdict == "match"


def test_verify_profile_other_verdicts():
    assert verify_profile(P("2143"), 1, 6, jobs=1).verdict == "out-of-hypothesis"
    assert verify_profile(P("231"), 3, 4, window=3, jobs=1).verdict == "no-fit"


def test_dichotomy():
    assert dichotomy_ratio(P("321"), 1, 5) == 1
    assert dichotomy_ratio(P("132"), 1, 5) == Fraction(1, 4)
    with pytest.raises(PreconditionError):
        dichotomy_ratio(P("132"), 11, 5)
    assert dichotomy_limit(P("132"), 1) == 0
    assert dichotomy_limit(P("132"), 0) == 1
    assert dichotomy_limit(P("231"), 3) == 1
    assert dichotomy_limit(identity(3), 0) == 0


def test_fibonacci_lower_bound():
    assert fibonacci_lower_bound(10, 3, 2) == 7
    assert fibonacci_lower_bound(2, 3, 2) == 0
    values = column_values(P("2143"), 2, 8, jobs=1)
    for n, value in enumerate(values, start=1):
        assert value >= fibonacci_lower_bound(n, 2, 2)
    with pytest.raises(OutOfHypothesisError):
        fibonacci_lower_bound(10, 3, 1)
    with pytest.raises(OutOfHypothesisError):
        fibonacci_lower_bound(10, 1, 2)


@pytest.mark.parametrize(
    "pattern,k",
    [("1324", 1), ("1324", 2), ("132", 1), ("132", 2), ("321", 0), ("321", 1), ("321", 2),
     ("123", 0), ("123", 1), ("123", 2)],
)
def test_profiles_match_predictions(pattern, k):
    assert verify_profile(P(pattern), k, 14, window=3, jobs=1).verdict == "match"


@pytest.mark.parametrize("window", [2, 3, 4])
@pytest.mark.parametrize("degree", range(7))
def test_poly_detect_recovers_synthesized_polynomials(degree, window):
    coefficients = tuple(Fraction(i + 1, degree + 1) for i in range(degree + 1))
    polynomial = PolyFit(degree, coefficients, 1, False)
    values = [polynomial.evaluate(n) for n in range(1, degree + window + 3)]
    fit = poly_detect(values, window=window)
    assert fit.degree == degree
    assert fit.coefficients == coefficients
    assert fit.stabilization_point == 1


def test_dichotomy_ratio_at_length_zero():
    assert dichotomy_ratio(P("21"), 0, 0) == 1
    assert dichotomy_ratio(Perm(()), 0, 0) == 0
    with pytest.raises(PreconditionError):
        dichotomy_ratio(P("21"), 1, 0)
    with pytest.raises(InvalidInputError):
        dichotomy_ratio(P("21"), 0, -1)


def test_fibonacci_ratios_decrease():
    # s_{n,3}(1324) = |Q(3)| = 10 and s_{n,3} = n(n^2 - 7)/6 once n >= 5.
    ratios = [dichotomy_ratio(P("1324"), 3, n) for n in range(5, 12)]
    assert ratios == [Fraction(60, n * (n * n - 7)) for n in range(5, 12)]
    assert ratios[0] == Fraction(2, 3)
    assert all(a > b for a, b in zip(ratios, ratios[1:]))


def test_non_fibonacci_ratios_increase_toward_one():
    # A permutation with two inversions contains 231 only as a block of consecutive values.
    ratios = [dichotomy_ratio(P("231"), 2, n) for n in range(3, 12)]
    assert ratios == [Fraction(n - 1, n + 1) for n in range(3, 12)]
    assert all(a < b < 1 for a, b in zip(ratios, ratios[1:]))


def test_ratio_report_non_fibonacci():
    report = ratio_report(P("231"), 2, 8, jobs=1)
    assert [p.n for p in report.points] == [3, 4, 5, 6, 7, 8]
    assert [p.ratio for p in report.points] == ["1/2", "3/5", "2/3", "5/7", "3/4", "7/9"]
    assert report.points[2].avoiders == 6
    assert report.points[2].total == 9
    assert report.trend == "increasing"
    assert report.limit == "1"
    assert report.profile_class == "non-fibonacci"
    assert all(p.lower_bound is None for p in report.points)
    assert sum(c.count for c in report.cores) == report.points[-1].avoiders == 21


def test_ratio_report_fibonacci():
    report = ratio_report(P("1324"), 3, 8, jobs=1)
    assert report.trend == "decreasing"
    assert report.limit == "0"
    assert report.points[-1].ratio == "5/38"
    assert report.points[-1].value == pytest.approx(5 / 38)

    cores = ratio_report(P("1324"), 1, 5, jobs=1).cores
    assert [(c.core, c.count) for c in cores] == [(["21"], 2)]
    assert ratio_report(P("321"), 1, 7, jobs=1).trend == "constant"


def test_ratio_report_lower_bounds():
    report = ratio_report(P("2143"), 2, 7, jobs=1)
    assert report.points[0].n == 3
    for point in report.points:
        assert point.lower_bound == comb(point.n - 2, 1)
        assert point.lower_bound <= point.avoiders
    assert report.limit == "0"


def test_ratio_report_rejects():
    with pytest.raises(InvalidInputError):
        ratio_report(Perm(()), 1, 5)
    with pytest.raises(InvalidInputError):
        ratio_report(P("21"), 1, 0)
    with pytest.raises(InvalidInputError):
        ratio_report(P("21"), -1, 4)


def test_known_constants_follow_structure():
    assert expected_profile(P("21"), 2).expected_leading == 0
    assert expected_profile(P("213"), 4).expected_leading == 5
    assert expected_profile(P("1324"), 4).expected_leading == 20
    assert expected_profile(P("1243"), 2).expected_leading is None
    assert expected_profile(P("2134"), 2).expected_leading is None


def _non_identity_patterns(length: int) -> list[Perm]:
    return [tau for tau in (Perm(v) for v in permutations(range(1, length + 1))) if tau != identity(length)]


def _check_profiles(tau: Perm):
    n_max = 12 if is_fibonacci(tau) else 14
    for k in range(5):
        report = verify_profile(tau, k, n_max, window=3, jobs=1)
        assert report.verdict in ("match", "out-of-hypothesis"), (str(tau), k, report.verdict)
        if report.fit is not None:
            tail = report.values[report.fit.stabilization_point - 1:]
            assert all(a <= b for a, b in zip(tail, tail[1:])), (str(tau), k)


@pytest.mark.parametrize("tau", _non_identity_patterns(2) + _non_identity_patterns(3), ids=str)
def test_profiles_of_short_patterns(tau):
    _check_profiles(tau)


@pytest.mark.slow
@pytest.mark.parametrize("tau", _non_identity_patterns(4), ids=str)
def test_profiles_of_length_four_patterns(tau):
    _check_profiles(tau)
