"""
Pruned exhaustive generation of pattern avoiders and their inversion triangles.

Permutations grow by appending a new last entry with a chosen relative value; every
prefix of an avoider standardizes to an avoider, so a prefix that contains the pattern
is cut together with its whole subtree. Appending the relative value v to a prefix of
length m adds m + 1 - v inversions, which also allows pruning by inversion count.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from multiprocessing import Pool
from typing import Iterator

from src.perms import Perm, core_padding, decreasing, direct_sum, identity, occurrence
from src.service.arg_checkers import checked_count, non_negative
from src.service.config import get_settings
from src.service.exceptions import InvalidInputError
from src.service.models import MonotoneReport, MonotoneViolation

logger = logging.getLogger(__name__)

_Rows = list[list[int]]


@dataclass(frozen=True, slots=True)
class InvTriangle:
    """
    rows[n-1][k] = s_{n,k}(pattern) for 1 <= n <= n_max. Row n has C(n,2)+1 entries, or
    min(C(n,2), k_max)+1 entries when the triangle was truncated at k_max.
    """

    pattern: Perm
    rows: tuple[tuple[int, ...], ...]
    k_max: int | None = None

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> tuple[int, ...]:
        if not 1 <= n <= self.n_max:
            raise InvalidInputError(f"Row {n} is outside 1..{self.n_max}")
        return self.rows[n - 1]

    def entry(self, n: int, k: int) -> int:
        """s_{n,k}; zero when k exceeds C(n,2)."""
        if self.k_max is not None and k > self.k_max:
            raise InvalidInputError(f"Column {k} was truncated (k_max = {self.k_max})")
        row = self.row(n)
        return row[k] if 0 <= k < len(row) else 0

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.rows]

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """(n, k, count) triples in row-major order."""
        for n, row in enumerate(self.rows, start=1):
            for k, count in enumerate(row):
                yield n, k, count


def _row_width(n: int, k_max: int | None) -> int:
    full = comb(n, 2) + 1
    return full if k_max is None else min(full, k_max + 1)


def _empty_rows(n_max: int, k_max: int | None) -> _Rows:
    return [[0] * _row_width(n, k_max) for n in range(1, n_max + 1)]


def _children(
    prefix: tuple[int, ...], inv: int, pattern: tuple[int, ...], k_max: int | None
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Extensions of an avoiding prefix that still avoid the pattern, by increasing new value."""
    m = len(prefix)
    lowest = 1 if k_max is None else max(1, m + 1 - (k_max - inv))
    for v in range(lowest, m + 2):
        child = tuple(x + (x >= v) for x in prefix) + (v,)
        if occurrence(child, pattern, m) is None:
            yield child, inv + m + 1 - v


def _walk(
    prefix: tuple[int, ...],
    inv: int,
    pattern: tuple[int, ...],
    n_max: int,
    k_max: int | None,
    rows: _Rows,
    frontier: list[tuple[tuple[int, ...], int]] | None = None,
    frontier_depth: int = 0,
):
    m = len(prefix)
    if frontier is not None and m == frontier_depth:
        frontier.append((prefix, inv))
        return
    if m:
        rows[m - 1][inv] += 1
    if m == n_max:
        return
    for child, child_inv in _children(prefix, inv, pattern, k_max):
        _walk(child, child_inv, pattern, n_max, k_max, rows, frontier, frontier_depth)


def _subtree_rows(task: tuple[tuple[int, ...], int, tuple[int, ...], int, int | None]) -> _Rows:
    prefix, inv, pattern, n_max, k_max = task
    rows = _empty_rows(n_max, k_max)
    _walk(prefix, inv, pattern, n_max, k_max, rows)
    return rows


def _merge_rows(total: _Rows, part: _Rows):
    for row, part_row in zip(total, part):
        for k, count in enumerate(part_row):
            row[k] += count


def _root_avoids(pattern: tuple[int, ...]) -> bool:
    # The empty permutation contains only the empty pattern.
    return len(pattern) > 0


def inversion_triangle(
    tau: Perm,
    n_max: int,
    k_max: int | None = None,
    jobs: int | None = None,
    split_depth: int | None = None,
) -> InvTriangle:
    """
    Count the avoiders of tau by length and number of inversions.

    tau - the forbidden pattern.
    n_max - the largest length to enumerate.
    k_max - if given, only inversion counts up to k_max are kept, and the search prunes
        every prefix with more inversions.
    jobs - worker processes; defaults to the configured value.
    split_depth - prefix length at which the search tree is split into independent tasks.

    Avoiders are counted, never stored. Per-task rows are merged by addition, so the
    result does not depend on jobs or split_depth.
    """
    non_negative(n_max, "n_max")
    if k_max is not None:
        non_negative(k_max, "k_max")
    settings = get_settings()
    jobs = settings.jobs if jobs is None else jobs
    split_depth = settings.split_depth if split_depth is None else split_depth
    pattern = tau.values

    rows = _empty_rows(n_max, k_max)
    if _root_avoids(pattern) and n_max > 0:
        if jobs <= 1 or split_depth <= 0 or split_depth >= n_max:
            _walk((), 0, pattern, n_max, k_max, rows)
        else:
            frontier: list[tuple[tuple[int, ...], int]] = []
            _walk((), 0, pattern, n_max, k_max, rows, frontier, split_depth)
            tasks = [(prefix, inv, pattern, n_max, k_max) for prefix, inv in frontier]
            logger.info(
                "Enumerating %s-avoiders to n=%d: %d subtree tasks at depth %d on %d workers",
                tau, n_max, len(tasks), split_depth, jobs,
            )
            with Pool(processes=jobs) as pool:
                for part in pool.imap(_subtree_rows, tasks, chunksize=max(1, len(tasks) // (4 * jobs))):
                    _merge_rows(rows, part)

    for n, row in enumerate(rows, start=1):
        for count in row:
            checked_count(count, f"s_{n}({tau})")
        logger.debug("s_%d(%s) = %d", n, tau, sum(row))
    return InvTriangle(tau, tuple(tuple(row) for row in rows), k_max)


def _iterate(
    prefix: tuple[int, ...], inv: int, pattern: tuple[int, ...], n: int, k_max: int | None
) -> Iterator[tuple[tuple[int, ...], int]]:
    if len(prefix) == n:
        yield prefix, inv
        return
    for child, child_inv in _children(prefix, inv, pattern, k_max):
        yield from _iterate(child, child_inv, pattern, n, k_max)


def iterate_avoiders(tau: Perm, n: int, k_max: int | None = None) -> Iterator[Perm]:
    """
    Yield every avoider of tau of length n once, in a fixed order: depth-first, children
    by increasing appended relative value. With k_max, only avoiders with at most k_max
    inversions are produced.
    """
    non_negative(n, "n")
    if not _root_avoids(tau.values):
        return
    for values, _ in _iterate((), 0, tau.values, n, k_max):
        yield Perm._trusted(values)


def iterate_avoiders_with_inversions(tau: Perm, n: int, k: int) -> Iterator[Perm]:
    """Yield the avoiders of tau of length n with exactly k inversions."""
    non_negative(k, "k")
    if not _root_avoids(tau.values):
        return
    for values, inv in _iterate((), 0, tau.values, n, k):
        if inv == k:
            yield Perm._trusted(values)


def count_avoiders(tau: Perm, n: int, jobs: int | None = None) -> int:
    """s_n(tau)."""
    non_negative(n, "n")
    if n == 0:
        return 1 if _root_avoids(tau.values) else 0
    return sum(inversion_triangle(tau, n, jobs=jobs).row(n))


def column_values(tau: Perm, k: int, n_max: int, jobs: int | None = None) -> list[int]:
    """[s_{n,k}(tau) for n = 1..n_max]."""
    non_negative(k, "k")
    triangle = inversion_triangle(tau, n_max, k_max=k, jobs=jobs)
    return [triangle.entry(n, k) for n in range(1, n_max + 1)]


def check_inv_monotone(tau: Perm, n_max: int, jobs: int | None = None) -> MonotoneReport:
    """List every k and n < n_max with s_{n,k}(tau) > s_{n+1,k}(tau)."""
    triangle = inversion_triangle(tau, n_max, jobs=jobs)
    violations = [
        MonotoneViolation(n=n, k=k, s_n_k=count, s_next_k=triangle.entry(n + 1, k))
        for n in range(1, n_max)
        for k, count in enumerate(triangle.row(n))
        if count > triangle.entry(n + 1, k)
    ]
    return MonotoneReport(pattern=str(tau), n_max=n_max, violations=violations)


@lru_cache(maxsize=128)
def mahonian_row(n: int) -> tuple[int, ...]:
    """
    Number of permutations of length n with k inversions, for k = 0..C(n,2).

    Built from inversion tables: the entry b_i ranges over 0..n-i independently.
    """
    row = [1]
    for size in range(1, n + 1):
        nxt = [0] * (len(row) + size - 1)
        for k, count in enumerate(row):
            for b in range(size):
                nxt[k + b] += count
        row = nxt
    return tuple(row)


def mahonian_count(n: int, k: int) -> int:
    non_negative(n, "n")
    if k < 0:
        return 0
    row = mahonian_row(n)
    return checked_count(row[k], f"mahonian({n},{k})") if k < len(row) else 0


def fibonacci_inv_count(n: int, k: int) -> int:
    """Number of Fibonacci permutations of length n with k inversions: C(n-k, k)."""
    if k < 0 or 2 * k > n:
        return 0
    return comb(n - k, k)


def iterate_fibonacci(n: int) -> Iterator[Perm]:
    """Every direct sum of 1's and 21's of total length n."""
    non_negative(n, "n")
    if n == 0:
        yield Perm(())
        return
    for head in (identity(1), decreasing(2)):
        if len(head) <= n:
            for tail in iterate_fibonacci(n - len(head)):
                yield direct_sum(head, tail)


def count_by_core(tau: Perm, n: int, k: int) -> dict[tuple[Perm, ...], int]:
    """s_{n,[c]}(tau): the avoiders of length n with k inversions grouped by their core."""
    census = Counter(core_padding(pi).core for pi in iterate_avoiders_with_inversions(tau, n, k))
    return dict(sorted(census.items()))


def wilf_equivalence_check(t: int, sigma: Perm, n_max: int) -> tuple[list[int], list[int]]:
    """
    Counts s_n((⊕^t 1) ⊕ sigma) and s_n((⊖^t 1) ⊕ sigma) for n = 1..n_max. The two
    patterns are Wilf-equivalent, so the lists agree.
    """
    increasing = direct_sum(identity(t), sigma)
    reverse = direct_sum(decreasing(t), sigma)
    first = inversion_triangle(increasing, n_max).row_sums()
    second = inversion_triangle(reverse, n_max).row_sums()
    return first, second


def trivially_inv_monotone(tau: Perm) -> bool:
    """tau_1 > 1 or tau_last < len(tau): then 1 ⊕ pi or pi ⊕ 1 injects one row into the next."""
    return len(tau) > 0 and (tau.values[0] > 1 or tau.values[-1] < len(tau))


def pad_front(pi: Perm) -> Perm:
    """1 ⊕ pi."""
    return direct_sum(identity(1), pi)


def pad_back(pi: Perm) -> Perm:
    """pi ⊕ 1."""
    return direct_sum(pi, identity(1))
