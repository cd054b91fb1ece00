"""
Permutations in one-line notation, pattern containment and structural decompositions.

Every operation here is pure: `Perm` and the other value types are immutable and may be
shared freely between worker processes and threads.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterator, Sequence

from src.service.exceptions import InvalidInputError, LimitExceededError

logger = logging.getLogger(__name__)

MAX_LENGTH = 64
EMPTY_TEXT = "-"

# Positions are 1-based, strictly increasing.
IndexSet = tuple[int, ...]


@dataclass(frozen=True, slots=True, order=True)
class Perm:
    """
    A permutation of 1..n in one-line notation. The empty permutation is allowed.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) > MAX_LENGTH:
            raise LimitExceededError(
                f"Permutations are limited to length {MAX_LENGTH}, got {len(values)}"
            )
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidInputError(f"{values} is not a rearrangement of 1..{len(values)}")

    @classmethod
    def _trusted(cls, values: tuple[int, ...]) -> "Perm":
        # Skips validation; only for values produced by the algorithms in this package.
        perm = object.__new__(cls)
        object.__setattr__(perm, "values", values)
        return perm

    @classmethod
    def parse(cls, text: str) -> "Perm":
        """
        Parse "364251", "3,6,4,2,5,1" or "-" (the empty permutation).

        Digit strings are only accepted for length at most 9.
        """
        text = text.strip()
        if text in (EMPTY_TEXT, ""):
            return cls(())
        try:
            if "," in text:
                values = tuple(int(part) for part in text.split(","))
            elif text.isdigit():
                values = tuple(int(c) for c in text)
            else:
                raise ValueError(text)
        except ValueError:
            raise InvalidInputError(f"Unrecognized permutation syntax: '{text}'") from None
        return cls(values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return format_perm(self.values)


def format_perm(values: Sequence[int]) -> str:
    """Render one-line notation: digits for length up to 9, comma separated otherwise."""
    if not values:
        return EMPTY_TEXT
    if len(values) <= 9:
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


def as_perm(value: "Perm | str | Sequence[int]") -> Perm:
    """Coerce text or a plain sequence into a Perm."""
    if isinstance(value, Perm):
        return value
    if isinstance(value, str):
        return Perm.parse(value)
    return Perm(tuple(value))


def identity(n: int) -> Perm:
    """The increasing permutation 12...n."""
    return Perm._trusted(tuple(range(1, n + 1)))


def decreasing(n: int) -> Perm:
    """The decreasing permutation n...21."""
    return Perm._trusted(tuple(range(n, 0, -1)))


def is_identity(pi: Perm) -> bool:
    return all(v == i for i, v in enumerate(pi.values, start=1))


def standardize(seq: Sequence[int]) -> Perm:
    """
    Return the permutation order-isomorphic to a sequence of distinct integers.
    """
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        raise InvalidInputError(f"Cannot standardize {seq}: entries must be distinct")
    return Perm._trusted(_standardize(seq))


def _standardize(seq: Sequence[int]) -> tuple[int, ...]:
    ranks = {v: r for r, v in enumerate(sorted(seq), start=1)}
    return tuple(ranks[v] for v in seq)


def _check_index_set(pi: Perm, indices: Sequence[int]) -> IndexSet:
    indices = tuple(indices)
    n = len(pi)
    for i, idx in enumerate(indices):
        if not 1 <= idx <= n:
            raise InvalidInputError(f"Index {idx} is out of range for a permutation of length {n}")
        if i and indices[i - 1] >= idx:
            raise InvalidInputError(f"Index set {indices} must be strictly increasing")
    return indices


def pattern_at(pi: Perm, indices: Sequence[int]) -> Perm:
    """pi[I]: the standardization of the entries of pi at the 1-based positions I."""
    indices = _check_index_set(pi, indices)
    return Perm._trusted(_standardize([pi.values[i - 1] for i in indices]))


@lru_cache(maxsize=4096)
def _search_plan(pattern: tuple[int, ...], forced: bool) -> tuple[tuple[int, int], ...]:
    """
    For each pattern entry matched left to right, the pattern indices of its nearest
    neighbours below and above in value among the entries already matched (-1 if none).
    A forced last entry counts as matched before all others.
    """
    k = len(pattern)
    known = [k - 1] if forced else []
    plan = []
    for j in range(k - 1 if forced else k):
        below = [i for i in known if pattern[i] < pattern[j]]
        above = [i for i in known if pattern[i] > pattern[j]]
        lo = max(below, key=lambda i: pattern[i]) if below else -1
        hi = min(above, key=lambda i: pattern[i]) if above else -1
        plan.append((lo, hi))
        known.append(j)
    return tuple(plan)


def occurrence(
    values: Sequence[int], pattern: Sequence[int], forced_last: int | None = None
) -> tuple[int, ...] | None:
    """
    Lexicographically least 0-based positions of an occurrence of `pattern` in `values`.

    values - distinct integers, not necessarily standardized.
    pattern - a permutation in one-line notation.
    forced_last - if given, the 0-based position that must hold the last pattern entry.

    Returns None when there is no occurrence.
    """
    pattern = tuple(pattern)
    k = len(pattern)
    n = len(values)
    if k == 0:
        return ()
    if k > n:
        return None
    chosen = [0] * k
    if forced_last is None:
        plan = _search_plan(pattern, False)
        free, end = k, n
    else:
        if forced_last < k - 1 or forced_last >= n:
            return None
        plan = _search_plan(pattern, True)
        chosen[k - 1] = forced_last
        free, end = k - 1, forced_last

    def extend(j: int, start: int) -> bool:
        if j == free:
            return True
        lo, hi = plan[j]
        low = values[chosen[lo]] if lo >= 0 else float("-inf")
        high = values[chosen[hi]] if hi >= 0 else float("inf")
        for p in range(start, end - (free - 1 - j)):
            if low < values[p] < high:
                chosen[j] = p
                if extend(j + 1, p + 1):
                    return True
        return False

    return tuple(chosen) if extend(0, 0) else None


def find_occurrence(pi: Perm, sigma: Perm, forced_last: int | None = None) -> IndexSet | None:
    """
    Find the lexicographically least index set I with pi[I] = sigma.

    forced_last - optional 1-based position required to be max(I).

    Returns None if sigma does not occur (with the requested last position).
    """
    if forced_last is not None:
        _check_index_set(pi, (forced_last,))
        forced_last -= 1
    found = occurrence(pi.values, sigma.values, forced_last)
    if found is None:
        return None
    return tuple(p + 1 for p in found)


def contains(pi: Perm, sigma: Perm) -> bool:
    return occurrence(pi.values, sigma.values) is not None


def avoids(pi: Perm, sigma: Perm) -> bool:
    return occurrence(pi.values, sigma.values) is None


def direct_sum(sigma: Perm, tau: Perm) -> Perm:
    """sigma ⊕ tau: tau placed above and to the right of sigma."""
    k = len(sigma)
    return Perm(sigma.values + tuple(v + k for v in tau.values))


def skew_sum(sigma: Perm, tau: Perm) -> Perm:
    """sigma ⊖ tau: tau placed below and to the right of sigma."""
    ell = len(tau)
    return Perm(tuple(v + ell for v in sigma.values) + tau.values)


def direct_sum_all(parts: Sequence[Perm]) -> Perm:
    return reduce(direct_sum, parts, Perm(()))


def _component_bounds(values: Sequence[int]) -> list[tuple[int, int]]:
    bounds = []
    start = 0
    running_max = 0
    for i, v in enumerate(values):
        running_max = max(running_max, v)
        if running_max == i + 1:
            bounds.append((start, i + 1))
            start = i + 1
    return bounds


def components(pi: Perm) -> list[Perm]:
    """The unique decomposition of pi into indecomposable direct summands."""
    return [
        Perm._trusted(tuple(v - start for v in pi.values[start:end]))
        for start, end in _component_bounds(pi.values)
    ]


def is_indecomposable(pi: Perm) -> bool:
    return len(_component_bounds(pi.values)) == 1


def inversions(pi: Perm) -> int:
    """Number of pairs i < j with pi_i > pi_j."""
    return sum(inversion_table(pi).entries)


@dataclass(frozen=True, slots=True)
class InversionTable:
    """
    b_1...b_n where b_i counts the letters right of position i that are smaller than pi_i.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        for i, b in enumerate(entries, start=1):
            if not 0 <= b <= n - i:
                raise InvalidInputError(
                    f"Inversion table entry b_{i} = {b} must lie in 0..{n - i}"
                )

    @property
    def is_weakly_decreasing(self) -> bool:
        return all(a >= b for a, b in zip(self.entries, self.entries[1:]))

    def __str__(self) -> str:
        if max(self.entries, default=0) < 10:
            return "".join(str(b) for b in self.entries)
        return ",".join(str(b) for b in self.entries)


def inversion_table(pi: Perm) -> InversionTable:
    values = pi.values
    n = len(values)
    return InversionTable(
        tuple(sum(1 for j in range(i + 1, n) if values[j] < values[i]) for i in range(n))
    )


def perm_from_inversion_table(table: InversionTable | Sequence[int]) -> Perm:
    """Rebuild the permutation with the given inversion table."""
    if not isinstance(table, InversionTable):
        table = InversionTable(tuple(table))
    remaining = list(range(1, len(table.entries) + 1))
    return Perm._trusted(tuple(remaining.pop(b) for b in table.entries))


def reverse_complement(pi: Perm) -> Perm:
    """tau'_i = n + 1 - tau_{n+1-i}."""
    n = len(pi)
    return Perm._trusted(tuple(n + 1 - v for v in reversed(pi.values)))


@dataclass(frozen=True, slots=True)
class LayerComposition:
    """Layer sizes l_1..l_m of a layered permutation."""

    layer_sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(self.layer_sizes)
        object.__setattr__(self, "layer_sizes", sizes)
        if any(size < 1 for size in sizes):
            raise InvalidInputError(f"Layer sizes must be positive, got {sizes}")

    @property
    def length(self) -> int:
        return sum(self.layer_sizes)

    def __len__(self) -> int:
        return len(self.layer_sizes)


def layers(pi: Perm) -> LayerComposition | None:
    """Layer sizes of pi, or None if pi is not a concatenation of increasing-ordered decreasing runs."""
    sizes = []
    for start, end in _component_bounds(pi.values):
        block = pi.values[start:end]
        if any(block[i] != end - i for i in range(end - start)):
            return None
        sizes.append(end - start)
    return LayerComposition(tuple(sizes))


def is_layered(pi: Perm) -> bool:
    return layers(pi) is not None


def layered_from_composition(composition: LayerComposition | Sequence[int]) -> Perm:
    """The layered permutation (⊖^{l_1}1) ⊕ ... ⊕ (⊖^{l_m}1)."""
    if not isinstance(composition, LayerComposition):
        composition = LayerComposition(tuple(composition))
    return direct_sum_all([decreasing(size) for size in composition.layer_sizes])


def is_fibonacci(pi: Perm) -> bool:
    """A layered permutation whose layers all have size at most 2."""
    found = layers(pi)
    return found is not None and all(size <= 2 for size in found.layer_sizes)


@dataclass(frozen=True, slots=True)
class CorePadding:
    """
    pi = a_0 ⊕ b_1 ⊕ a_1 ⊕ ... ⊕ b_m ⊕ a_m with each a_i an identity of size profile[i]
    and each core block b_i indecomposable of size at least 2.
    """

    core: tuple[Perm, ...]
    profile: tuple[int, ...]

    def __post_init__(self):
        if len(self.profile) != len(self.core) + 1:
            raise InvalidInputError("A padding profile has exactly one more entry than the core")
        if any(a < 0 for a in self.profile):
            raise InvalidInputError(f"Padding sizes must be non-negative, got {self.profile}")
        for block in self.core:
            if len(block) < 2 or not is_indecomposable(block):
                raise InvalidInputError(f"Core block {block} must be indecomposable of size >= 2")

    def reassemble(self) -> Perm:
        parts = [identity(self.profile[0])]
        for block, pad in zip(self.core, self.profile[1:]):
            parts += [block, identity(pad)]
        return direct_sum_all(parts)


def core_padding(pi: Perm) -> CorePadding:
    core = []
    profile = [0]
    for comp in components(pi):
        if len(comp) == 1:
            profile[-1] += 1
        else:
            core.append(comp)
            profile.append(0)
    return CorePadding(tuple(core), tuple(profile))
