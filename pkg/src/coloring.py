"""
Red-blue coloring of permutations avoiding sigma ⊕ (tau ⊖ 1) ⊕ rho, and the merge
counting bound.

A permutation avoiding sigma ⊕ (tau ⊖ 1) ⊕ rho splits into a red part avoiding
sigma ⊕ (tau ⊖ 1) and a blue part avoiding (tau ⊖ 1) ⊕ rho. The coloring below builds
that split greedily, left to right.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Sequence

from src.perms import (
    IndexSet,
    Perm,
    direct_sum,
    format_perm,
    occurrence,
    pattern_at,
    skew_sum,
    standardize,
)
from src.service.arg_checkers import checked_count, non_negative
from src.service.exceptions import InvalidInputError
from src.service.models import ColoringReport, ColoringViolation

logger = logging.getLogger(__name__)

_ONE = Perm((1,))


@dataclass(frozen=True, slots=True)
class PatternTriple:
    """The three (possibly empty) pieces of the composite pattern sigma ⊕ (tau ⊖ 1) ⊕ rho."""

    sigma: Perm
    tau: Perm
    rho: Perm

    @classmethod
    def parse(cls, text: str) -> "PatternTriple":
        """Parse 'sigma:tau:rho', e.g. '1:21:1'; '-' stands for an empty piece."""
        pieces = [piece.strip() for piece in text.split(":")]
        if len(pieces) != 3:
            raise InvalidInputError(f"A pattern triple has three parts separated by ':', got '{text}'")
        return cls(*(Perm.parse(piece) for piece in pieces))

    def middle(self) -> Perm:
        return skew_sum(self.tau, _ONE)

    def left_pattern(self) -> Perm:
        """sigma ⊕ (tau ⊖ 1): the pattern the red elements avoid."""
        return direct_sum(self.sigma, self.middle())

    def right_pattern(self) -> Perm:
        """(tau ⊖ 1) ⊕ rho: the pattern the blue elements avoid."""
        return direct_sum(self.middle(), self.rho)

    def __str__(self) -> str:
        return f"({self.sigma}, {self.tau}, {self.rho})"


def composite_pattern(triple: PatternTriple) -> Perm:
    """sigma ⊕ (tau ⊖ 1) ⊕ rho."""
    return direct_sum(triple.left_pattern(), triple.rho)


@dataclass(frozen=True, slots=True)
class Coloring:
    """A red/blue partition of the positions of a permutation (1-based)."""

    perm: Perm
    red: IndexSet
    blue: IndexSet

    def render(self) -> str:
        """One R or B per position, aligned with one-line notation."""
        blue = set(self.blue)
        return "".join("B" if i in blue else "R" for i in range(1, len(self.perm) + 1))

    def red_values(self) -> tuple[int, ...]:
        return tuple(self.perm.values[i - 1] for i in self.red)

    def blue_values(self) -> tuple[int, ...]:
        return tuple(self.perm.values[i - 1] for i in self.blue)

    def red_pattern(self) -> Perm:
        return standardize(self.red_values())

    def blue_pattern(self) -> Perm:
        return standardize(self.blue_values())


def red_blue_color(pi: Perm, triple: PatternTriple) -> Coloring:
    """
    Color pi left to right. Position i turns blue if coloring it red would complete a red
    occurrence of sigma ⊕ (tau ⊖ 1) with pi_i as its rightmost element, or else if an
    earlier blue element is smaller than pi_i. Otherwise it is red.
    """
    left = triple.left_pattern().values
    red_values: list[int] = []
    red: list[int] = []
    blue: list[int] = []
    min_blue = None
    for i, value in enumerate(pi.values, start=1):
        red_values.append(value)
        completes = occurrence(red_values, left, forced_last=len(red_values) - 1) is not None
        red_values.pop()
        if completes or (min_blue is not None and min_blue < value):
            blue.append(i)
            min_blue = value if min_blue is None else min(min_blue, value)
        else:
            red.append(i)
            red_values.append(value)
    return Coloring(pi, tuple(red), tuple(blue))


def _witness(pi: Perm, positions: IndexSet, pattern: Perm) -> tuple[int, ...] | None:
    found = occurrence([pi.values[i - 1] for i in positions], pattern.values)
    if found is None:
        return None
    return tuple(positions[p] for p in found)


def check_coloring_lemma(pi: Perm, triple: PatternTriple) -> ColoringReport:
    """
    Color pi and verify that the red part avoids sigma ⊕ (tau ⊖ 1) and, when pi avoids
    the composite pattern, that the blue part avoids (tau ⊖ 1) ⊕ rho.
    """
    coloring = red_blue_color(pi, triple)
    left, right, composite = triple.left_pattern(), triple.right_pattern(), composite_pattern(triple)
    violations = []

    red_hit = _witness(pi, coloring.red, left)
    if red_hit is not None:
        violations.append(
            ColoringViolation(part="red", pattern=str(left), witness=list(red_hit))
        )
    avoids_composite = occurrence(pi.values, composite.values) is None
    if avoids_composite:
        blue_hit = _witness(pi, coloring.blue, right)
        if blue_hit is not None:
            violations.append(
                ColoringViolation(part="blue", pattern=str(right), witness=list(blue_hit))
            )
    if violations:
        logger.warning("Coloring of %s for %s violates the merge lemma", pi, triple)

    return ColoringReport(
        perm=str(pi),
        triple=[str(triple.sigma), str(triple.tau), str(triple.rho)],
        coloring=coloring.render(),
        red=format_perm(coloring.red_values()),
        blue=format_perm(coloring.blue_values()),
        avoids_composite=avoids_composite,
        passed=not violations,
        violations=violations,
    )


def merge_witness_check(
    pi: Perm, first: Sequence[int], second: Sequence[int], sigma: Perm, tau: Perm
) -> bool:
    """True iff the positions I, J partition pi, pi[I] = sigma and pi[J] = tau."""
    first, second = tuple(first), tuple(second)
    if set(first) & set(second) or sorted(first + second) != list(range(1, len(pi) + 1)):
        return False
    return pattern_at(pi, first) == sigma and pattern_at(pi, second) == tau


def merge_convolution_bound(a: Sequence[int], b: Sequence[int], n: int) -> int:
    """
    Number of ways to merge a length-k member of one class with a length-(n-k) member of
    another, summed over k: sum of C(n, k)^2 * a_k * b_(n-k).
    """
    non_negative(n, "n")
    if len(a) <= n or len(b) <= n:
        raise InvalidInputError(f"Count sequences must have at least {n + 1} terms")
    total = 0
    for k in range(n + 1):
        total = checked_count(total + comb(n, k) ** 2 * a[k] * b[n - k], "merge bound")
    return total
