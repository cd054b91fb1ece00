"""
Exhaustive harnesses for the lemmas and conjectures about pattern avoiders with few
inversions. Every harness returns a CheckReport; `passed` is False as soon as a single
instance fails.
"""

import logging
from itertools import permutations
from math import comb
from typing import Callable, NamedTuple

from src.bounds import (
    compositions,
    layered_bound_recursive_root,
    layered_bound_root,
    partition_bound_holds,
    q_bound_holds,
    s132_column_sum_bound,
)
from src.coloring import (
    PatternTriple,
    check_coloring_lemma,
    composite_pattern,
    merge_convolution_bound,
)
from src.enumeration import (
    check_inv_monotone,
    count_avoiders,
    inversion_triangle,
    iterate_avoiders_with_inversions,
)
from src.partitions import (
    avoider_132_from_partition,
    bijection_1324_forward,
    bijection_1324_inverse,
    enumerate_partition_pairs,
    partition_count,
    partition_of_132_avoider,
    q_count,
)
from src.perms import (
    Perm,
    as_perm,
    avoids,
    components,
    identity,
    inversion_table,
    inversions,
    is_indecomposable,
    perm_from_inversion_table,
)
from src.service.arg_checkers import non_negative
from src.service.exceptions import InvalidInputError
from src.service.models import CheckReport

logger = logging.getLogger(__name__)

MAX_REPORTED_VIOLATIONS = 100

_P132 = Perm((1, 3, 2))
_P1324 = Perm((1, 3, 2, 4))

# 1324 and 14325.
CONVOLUTION_TRIPLES = ("1:1:1", "1:21:1")

DEFAULT_TRIPLES = (
    ("1", "1", "1"),
    ("1", "-", "1"),
    ("12", "1", "1"),
    ("1", "1", "12"),
    ("-", "1", "1"),
)


class _Tally:
    """Counts examined instances and keeps the first failures."""

    def __init__(self, name: str, **parameters):
        self.name = name
        self.parameters = parameters
        self.checked = 0
        self.failures = 0
        self.violations: list[str] = []

    def record(self, ok: bool, message: Callable[[], str]):
        self.checked += 1
        if not ok:
            self.failures += 1
            if len(self.violations) < MAX_REPORTED_VIOLATIONS:
                self.violations.append(message())

    def report(self) -> CheckReport:
        log = logger.info if not self.failures else logger.warning
        log("Check %s %s: %d instances, %d failures", self.name, self.parameters, self.checked, self.failures)
        return CheckReport(
            name=self.name,
            parameters=self.parameters,
            checked=self.checked,
            passed=self.failures == 0,
            violations=self.violations,
        )


def _all_perms(n: int):
    for values in permutations(range(1, n + 1)):
        yield Perm._trusted(values)


def red_blue(n_max: int = 7, triples=DEFAULT_TRIPLES) -> CheckReport:
    """Color every permutation of length <= n_max against each triple and verify the merge lemma."""
    non_negative(n_max, "n_max")
    parsed = [PatternTriple(*(Perm.parse(p) for p in t)) for t in triples]
    tally = _Tally("red_blue", n_max=n_max, triples=" ".join(str(t) for t in parsed))
    for n in range(n_max + 1):
        for pi in _all_perms(n):
            for triple in parsed:
                report = check_coloring_lemma(pi, triple)
                tally.record(
                    report.passed,
                    lambda: f"{pi} {triple}: "
                    + "; ".join(f"{v.part} contains {v.pattern} at {v.witness}" for v in report.violations),
                )
    return tally.report()


def comp_inv(n_max: int = 8) -> CheckReport:
    """inv(pi) >= n - (number of components) for every permutation."""
    non_negative(n_max, "n_max")
    tally = _Tally("comp_inv", n_max=n_max)
    for n in range(n_max + 1):
        for pi in _all_perms(n):
            inv, parts = inversions(pi), len(components(pi))
            tally.record(inv >= n - parts, lambda: f"{pi}: inv {inv} < {n} - {parts}")
    return tally.report()


def inversion_table_round_trip(n_max: int = 8) -> CheckReport:
    """Decoding the inversion table recovers pi, and its entries sum to inv(pi)."""
    non_negative(n_max, "n_max")
    tally = _Tally("inversion_table_round_trip", n_max=n_max)
    for n in range(n_max + 1):
        for pi in _all_perms(n):
            table = inversion_table(pi)
            ok = perm_from_inversion_table(table) == pi and sum(table.entries) == inversions(pi)
            tally.record(ok, lambda: f"{pi}: table {table} does not round trip")
    return tally.report()


def characterization_132(n_max: int = 8) -> CheckReport:
    """pi avoids 132 iff its inversion table is weakly decreasing."""
    non_negative(n_max, "n_max")
    tally = _Tally("characterization_132", n_max=n_max)
    for n in range(n_max + 1):
        for pi in _all_perms(n):
            table = inversion_table(pi)
            ok = avoids(pi, _P132) == table.is_weakly_decreasing
            tally.record(ok, lambda: f"{pi}: table {table} disagrees with 132-avoidance")
    return tally.report()


def inv_monotone(pattern: str = "1324", n_max: int = 9, jobs: int | None = None) -> CheckReport:
    """s_{n,k}(pattern) <= s_{n+1,k}(pattern) for every n < n_max."""
    tau = as_perm(pattern)
    monotone = check_inv_monotone(tau, n_max, jobs=jobs)
    tally = _Tally("inv_monotone", pattern=str(tau), n_max=n_max)
    # One instance per compared entry.
    tally.checked = sum(comb(n, 2) + 1 for n in range(1, n_max))
    for v in monotone.violations:
        tally.failures += 1
        if len(tally.violations) < MAX_REPORTED_VIOLATIONS:
            tally.violations.append(f"k={v.k}: s_{v.n} = {v.s_n_k} > s_{v.n + 1} = {v.s_next_k}")
    return tally.report()


def partition_bounds(k_max: int = 1000, q_k_max: int = 500, n_max: int = 8) -> CheckReport:
    """
    p(k) < rho^sqrt(k) for 1 <= k <= k_max, |Q(k)| < (k+1) rho^sqrt(2k) for 1 <= k <= q_k_max,
    and s_n(132) <= p(0) + ... + p(C(n,2)) for n <= n_max.
    """
    tally = _Tally("partition_bounds", k_max=k_max, q_k_max=q_k_max, n_max=n_max)
    for k in range(1, k_max + 1):
        tally.record(partition_bound_holds(k), lambda: f"p({k}) = {partition_count(k)} exceeds rho^sqrt({k})")
    for k in range(1, q_k_max + 1):
        tally.record(q_bound_holds(k), lambda: f"|Q({k})| = {q_count(k)} exceeds (k+1) rho^sqrt(2k)")
    if n_max > 0:
        sums = inversion_triangle(_P132, n_max).row_sums()
        for n, count in enumerate(sums, start=1):
            bound = s132_column_sum_bound(n)
            tally.record(count <= bound.value, lambda: f"s_{n}(132) = {count} exceeds {bound.text()}")
    return tally.report()


def _avoider_counts(tau: Perm, n_max: int, jobs: int | None) -> list[int]:
    # Index n holds s_n(tau), starting at n = 0.
    return [count_avoiders(tau, 0)] + inversion_triangle(tau, n_max, jobs=jobs).row_sums()


def convolution(n_max: int = 9, triple: str | None = None, jobs: int | None = None) -> CheckReport:
    """
    s_n(sigma ⊕ (tau ⊖ 1) ⊕ rho) <= sum_k C(n,k)^2 a_k b_(n-k), where a and b count the
    avoiders of sigma ⊕ (tau ⊖ 1) and of (tau ⊖ 1) ⊕ rho. Without a triple ('1:21:1')
    both 1324 and 14325 are checked.
    """
    non_negative(n_max, "n_max")
    triples = [PatternTriple.parse(t) for t in ((triple,) if triple else CONVOLUTION_TRIPLES)]
    composites = [composite_pattern(t) for t in triples]
    tally = _Tally("convolution", n_max=n_max, patterns=" ".join(map(str, composites)))
    for t, composite in zip(triples, composites):
        counts = _avoider_counts(composite, n_max, jobs)
        left = _avoider_counts(t.left_pattern(), n_max, jobs)
        right = _avoider_counts(t.right_pattern(), n_max, jobs)
        for n in range(n_max + 1):
            bound = merge_convolution_bound(left, right, n)
            tally.record(counts[n] <= bound, lambda: f"s_{n}({composite}) = {counts[n]} exceeds {bound}")
    return tally.report()


def bijection_132(n_max: int = 9) -> CheckReport:
    """
    The partition map is a bijection from 132-avoiders of length n with k < n inversions
    onto the partitions of k, inverted by avoider_132_from_partition.
    """
    non_negative(n_max, "n_max")
    tally = _Tally("bijection_132", n_max=n_max)
    for n in range(1, n_max + 1):
        for k in range(n):
            seen = set()
            for pi in iterate_avoiders_with_inversions(_P132, n, k):
                lam = partition_of_132_avoider(pi)
                seen.add(lam)
                back = avoider_132_from_partition(lam, n)
                tally.record(back == pi and lam.size == k, lambda: f"{pi} -> {lam} -> {back}")
            tally.record(len(seen) == partition_count(k), lambda: f"n={n}, k={k}: {len(seen)} images")
    return tally.report()


def indecomposable_132(k_max: int = 12) -> CheckReport:
    """Every partition of k represents exactly one indecomposable 132-avoider."""
    non_negative(k_max, "k_max")
    tally = _Tally("indecomposable_132", k_max=k_max)
    for k in range(1, k_max + 1):
        images = []
        for n in range(2, k + 2):
            for pi in iterate_avoiders_with_inversions(_P132, n, k):
                if is_indecomposable(pi):
                    images.append(partition_of_132_avoider(pi))
        tally.record(
            len(images) == len(set(images)) == partition_count(k),
            lambda: f"k={k}: {len(images)} indecomposables, {len(set(images))} partitions",
        )
    return tally.report()


def bijection_1324(n_max: int = 9, k_max: int = 8) -> CheckReport:
    """
    The pair map inverts bijection_1324_inverse on 1324-avoiders with k < n - 1 inversions,
    hits |Q(k)| distinct pairs, and every pair of Q(k), k <= k_max, survives a round trip
    at n = k + 2.
    """
    non_negative(n_max, "n_max")
    tally = _Tally("bijection_1324", n_max=n_max, k_max=k_max)
    for n in range(2, n_max + 1):
        for k in range(n - 1):
            seen = set()
            for pi in iterate_avoiders_with_inversions(_P1324, n, k):
                pair = bijection_1324_forward(pi)
                seen.add(pair)
                back = bijection_1324_inverse(pair, n)
                tally.record(back == pi, lambda: f"{pi} -> {pair} -> {back}")
            tally.record(len(seen) == q_count(k), lambda: f"n={n}, k={k}: {len(seen)} images")
    for k in range(k_max + 1):
        for pair in enumerate_partition_pairs(k):
            pi = bijection_1324_inverse(pair, k + 2)
            again = bijection_1324_forward(pi)
            tally.record(again == pair, lambda: f"{pair} -> {pi} -> {again}")
    return tally.report()


def layered_bounds(n_max: int = 12) -> CheckReport:
    """
    For every composition of every length l <= n_max: the recursive evaluation of the
    layered bound equals the closed form, and the bound is at most 4 l^2.
    """
    non_negative(n_max, "n_max")
    tally = _Tally("layered_bounds", n_max=n_max)
    for length in range(1, n_max + 1):
        for parts in compositions(length):
            root = layered_bound_root(parts)
            if len(parts) >= 2:
                recursive = layered_bound_recursive_root(parts)
                tally.record(recursive == root, lambda: f"{parts}: recursion {recursive} != closed form {root}")
            tally.record(root**2 <= 4 * length**2, lambda: f"{parts}: bound {root**2} > 4 * {length}^2")
    return tally.report()


def erdos_szekeres(lengths: tuple[int, ...] = (3, 4), k_max: int = 3, n_max: int = 14) -> CheckReport:
    """s_{n,k}(12...l) = 0 whenever n > (l - 1)(k + 1)."""
    tally = _Tally("erdos_szekeres", lengths=",".join(map(str, lengths)), k_max=k_max, n_max=n_max)
    for length in lengths:
        triangle = inversion_triangle(identity(length), n_max, k_max=k_max)
        for k in range(k_max + 1):
            for n in range((length - 1) * (k + 1) + 1, n_max + 1):
                count = triangle.entry(n, k)
                tally.record(count == 0, lambda: f"s_{n},{k}({identity(length)}) = {count}")
    return tally.report()


class Harness(NamedTuple):
    """A harness, the parameters it takes and the largest n_max / k_max the HTTP API runs it with."""

    func: Callable[..., CheckReport]
    params: tuple[str, ...]
    api_max_n: int | None = None
    api_max_k: int | None = None


CHECKS: dict[str, Harness] = {
    "red-blue": Harness(red_blue, ("n_max",), api_max_n=7),
    "comp-inv": Harness(comp_inv, ("n_max",), api_max_n=9),
    "inversion-table": Harness(inversion_table_round_trip, ("n_max",), api_max_n=9),
    "characterization-132": Harness(characterization_132, ("n_max",), api_max_n=9),
    "inv-monotone": Harness(inv_monotone, ("pattern", "n_max", "jobs"), api_max_n=10),
    "partition-bounds": Harness(partition_bounds, ("k_max", "n_max"), api_max_n=10, api_max_k=1000),
    "convolution": Harness(convolution, ("n_max", "triple", "jobs"), api_max_n=9),
    "bijection-132": Harness(bijection_132, ("n_max",), api_max_n=10),
    "indecomposable-132": Harness(indecomposable_132, ("k_max",), api_max_k=14),
    "bijection-1324": Harness(bijection_1324, ("n_max", "k_max"), api_max_n=10, api_max_k=10),
    "erdos-szekeres": Harness(erdos_szekeres, ("k_max", "n_max"), api_max_n=16, api_max_k=4),
    "layered-bounds": Harness(layered_bounds, ("n_max",), api_max_n=16),
}


def get_harness(name: str) -> Harness:
    harness = CHECKS.get(name)
    if harness is None:
        raise InvalidInputError(f"Unknown check '{name}', expected one of {', '.join(CHECKS)}")
    return harness


def run_check(name: str, jobs: int | None = None, **params) -> CheckReport:
    """
    Run a harness by name. Parameters left as None take the harness defaults; a parameter
    the harness does not take is rejected. `jobs` only reaches harnesses that enumerate
    in parallel.
    """
    harness = get_harness(name)
    given = {key: value for key, value in params.items() if value is not None}
    unknown = sorted(set(given) - set(harness.params))
    if unknown:
        raise InvalidInputError(f"Check '{name}' does not take {', '.join(unknown)}")
    if jobs is not None and "jobs" in harness.params:
        given["jobs"] = jobs
    return harness.func(**given)
