"""
Integer partitions and the bijections between them and pattern avoiders with few inversions.

A 132-avoider has a weakly decreasing inversion table; dropping its trailing zeros gives
the partition that represents it. A 1324-avoider of length n with k < n - 1 inversions
is sigma ⊕ 1 ⊕ ... ⊕ 1 ⊕ tau with sigma avoiding 132 and tau avoiding 213, and maps to
the pair of partitions representing sigma and the reverse-complement of tau.
"""

import logging
import threading
from dataclasses import dataclass
from typing import Iterator

from src.perms import (
    InversionTable,
    Perm,
    components,
    contains,
    direct_sum_all,
    identity,
    inversion_table,
    inversions,
    perm_from_inversion_table,
    reverse_complement,
)
from src.service.arg_checkers import at_most, checked_count, non_negative
from src.service.exceptions import (
    InvalidInputError,
    PatternContainmentError,
    PreconditionError,
    TooManyInversionsError,
)
from src.service.models import BijectionRequest, BijectionResponse

logger = logging.getLogger(__name__)

MAX_PARTITION_K = 1200
EMPTY_TEXT = "0"

_P132 = Perm((1, 3, 2))
_P1324 = Perm((1, 3, 2, 4))


@dataclass(frozen=True, slots=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers; the empty partition is allowed."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise InvalidInputError(f"Partition parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidInputError(f"Partition parts must be weakly decreasing, got {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse "5+4+4+1+1", "5,4,4,1,1" or "0" (the empty partition)."""
        text = text.strip()
        if text in (EMPTY_TEXT, ""):
            return cls(())
        try:
            parts = tuple(int(p) for p in text.replace("+", ",").split(","))
        except ValueError:
            raise InvalidInputError(f"Unrecognized partition syntax: '{text}'") from None
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts) if self.parts else EMPTY_TEXT


@dataclass(frozen=True, slots=True, order=True)
class PartitionPair:
    """An element (lambda, mu) of Q(k) with k = |lambda| + |mu|."""

    lam: Partition
    mu: Partition

    @property
    def size(self) -> int:
        return self.lam.size + self.mu.size

    def __str__(self) -> str:
        return f"({self.lam}, {self.mu})"


_memo = [1]
_memo_lock = threading.Lock()


def _pentagonal_terms(k: int) -> Iterator[tuple[int, int]]:
    """(offset, sign) pairs of Euler's recurrence p(k) = sum sign * p(k - offset)."""
    j = 1
    while True:
        sign = 1 if j % 2 else -1
        for g in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            if g > k:
                return
            yield g, sign
        j += 1


def partition_count(k: int) -> int:
    """p(k), the number of integer partitions of k."""
    non_negative(k, "k")
    at_most(k, MAX_PARTITION_K, "k")
    if k < len(_memo):
        return _memo[k]
    with _memo_lock:
        for m in range(len(_memo), k + 1):
            value = sum(sign * _memo[m - g] for g, sign in _pentagonal_terms(m))
            _memo.append(checked_count(value, f"p({m})"))
    return _memo[k]


def _partitions(k: int, largest: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def enumerate_partitions(k: int) -> Iterator[Partition]:
    """Every partition of k once, in reverse lexicographic order."""
    non_negative(k, "k")
    for parts in _partitions(k, k):
        yield Partition(parts)


def q_count(k: int) -> int:
    """|Q(k)| = sum over i of p(i) p(k - i)."""
    non_negative(k, "k")
    return checked_count(sum(partition_count(i) * partition_count(k - i) for i in range(k + 1)))


def enumerate_partition_pairs(k: int) -> Iterator[PartitionPair]:
    """The elements of Q(k), grouped by |lambda| = 0..k."""
    non_negative(k, "k")
    for i in range(k + 1):
        for lam in enumerate_partitions(i):
            for mu in enumerate_partitions(k - i):
                yield PartitionPair(lam, mu)


def indecomposable_from_partition(lam: Partition) -> Perm:
    """
    The unique indecomposable 132-avoider represented by lambda.

    The inversion table lambda padded with zeros to length |lambda| + 1 is always valid;
    its permutation is sigma ⊕ 1 ⊕ ... ⊕ 1, and sigma is its first component.
    """
    k = lam.size
    table = InversionTable(lam.parts + (0,) * (k + 1 - len(lam.parts)))
    return components(perm_from_inversion_table(table))[0]


def partition_of_132_avoider(pi: Perm) -> Partition:
    """The partition representing a 132-avoider: its inversion table without trailing zeros."""
    if contains(pi, _P132):
        raise PatternContainmentError(f"{pi} contains 132")
    entries = list(inversion_table(pi).entries)
    while entries and entries[-1] == 0:
        entries.pop()
    return Partition(tuple(entries))


def avoider_132_from_partition(lam: Partition, n: int) -> Perm:
    """The 132-avoider of length n represented by lambda: sigma ⊕ 1 ⊕ ... ⊕ 1."""
    sigma = indecomposable_from_partition(lam)
    if n < len(sigma):
        raise PreconditionError(
            f"Partition {lam} represents no 132-avoider shorter than {len(sigma)}, got n = {n}"
        )
    return direct_sum_all([sigma, identity(n - len(sigma))])


def bijection_1324_forward(pi: Perm) -> PartitionPair:
    """
    Map a 1324-avoider of length n with fewer than n - 1 inversions to its pair in Q(k).
    """
    if contains(pi, _P1324):
        raise PatternContainmentError(f"{pi} contains 1324")
    n, k = len(pi), inversions(pi)
    if k >= n - 1:
        raise TooManyInversionsError(
            f"{pi} has {k} inversions; the bijection needs fewer than n - 1 = {n - 1}"
        )
    parts = components(pi)
    sigma, tau = parts[0], parts[-1]
    return PartitionPair(
        partition_of_132_avoider(sigma), partition_of_132_avoider(reverse_complement(tau))
    )


def bijection_1324_inverse(pair: PartitionPair, n: int) -> Perm:
    """Build sigma ⊕ (identity padding) ⊕ tau of length n from (lambda, mu)."""
    if n < pair.size + 2:
        raise PreconditionError(
            f"The pair {pair} of size {pair.size} needs n >= {pair.size + 2}, got n = {n}"
        )
    sigma = indecomposable_from_partition(pair.lam)
    tau = reverse_complement(indecomposable_from_partition(pair.mu))
    return direct_sum_all([sigma, identity(n - len(sigma) - len(tau)), tau])


BIJECTIONS = ("132-forward", "132-inverse", "1324-forward", "1324-inverse")


def _require(value, field: str, name: str):
    if value is None:
        raise InvalidInputError(f"The {name} bijection needs '{field}'")
    return value


def apply_bijection(name: str, request: BijectionRequest) -> BijectionResponse:
    """Run one direction of the 132 or 1324 bijection on text input."""
    if name == "132-forward":
        pi = Perm.parse(_require(request.perm, "perm", name))
        lam = partition_of_132_avoider(pi)
        return BijectionResponse(bijection=name, perm=str(pi), partition=str(lam), inversions=lam.size)
    if name == "132-inverse":
        lam = Partition.parse(_require(request.partition, "partition", name))
        pi = avoider_132_from_partition(lam, _require(request.n, "n", name))
        return BijectionResponse(bijection=name, perm=str(pi), partition=str(lam), inversions=lam.size)
    if name == "1324-forward":
        pi = Perm.parse(_require(request.perm, "perm", name))
        pair = bijection_1324_forward(pi)
    elif name == "1324-inverse":
        pair = PartitionPair(
            Partition.parse(_require(request.lam, "lam", name)),
            Partition.parse(_require(request.mu, "mu", name)),
        )
        pi = bijection_1324_inverse(pair, _require(request.n, "n", name))
    else:
        raise InvalidInputError(f"Unknown bijection '{name}', expected one of {', '.join(BIJECTIONS)}")
    return BijectionResponse(
        bijection=name, perm=str(pi), lam=str(pair.lam), mu=str(pair.mu), inversions=pair.size
    )
