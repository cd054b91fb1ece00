"""
Closed-form Stanley-Wilf bound calculators and the numeric inequalities behind them.

Values are mpmath reals at the configured working precision. Inequalities between
exact counts and real bounds are compared in log space with a small slack.
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Callable, Iterator, Sequence

from mpmath import mp, mpf

from src.partitions import MAX_PARTITION_K, partition_count, q_count
from src.perms import LayerComposition
from src.service.arg_checkers import non_negative
from src.service.config import get_settings
from src.service.exceptions import InvalidInputError, PreconditionError
from src.service.models import BoundResponse
from src.template_utils import render_trace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundValue:
    """A non-negative real bound and the trace of how it was obtained."""

    value: mpf
    formula: str
    topic: str
    derivation: str

    def __float__(self) -> float:
        return float(self.value)

    def text(self, digits: int = 15) -> str:
        return mp.nstr(self.value, digits)

    def to_model(self) -> BoundResponse:
        return BoundResponse(
            formula=self.formula,
            topic=self.topic,
            value=float(self.value),
            value_text=self.text(),
            derivation=self.derivation,
        )


def _bound(formula: str, value: mpf, **trace) -> BoundValue:
    if not mp.isfinite(value) or value < 0:
        raise InvalidInputError(f"{formula} produced a value outside [0, inf): {value}")
    trace = render_trace(formula, {**trace, "value": mp.nstr(value, 15)})
    return BoundValue(value=value, **trace)


def _working_precision():
    return mp.workdps(get_settings().precision_dps)


def _rho() -> mpf:
    return mp.exp(mp.pi * mp.sqrt(mpf(2) / 3))


def _as_composition(layers: LayerComposition | Sequence[int]) -> LayerComposition:
    composition = layers if isinstance(layers, LayerComposition) else LayerComposition(tuple(layers))
    if not composition.layer_sizes:
        raise InvalidInputError("A layered bound needs at least one layer")
    return composition


def sqrt_merge_combine(alpha: float | int | mpf, beta: float | int | mpf) -> BoundValue:
    """Growth rate bound (sqrt(alpha) + sqrt(beta))^2 for a merge of two classes."""
    with _working_precision():
        alpha, beta = mpf(alpha), mpf(beta)
        if alpha < 0 or beta < 0:
            raise InvalidInputError("Growth rates must be non-negative")
        sqrt_alpha, sqrt_beta = mp.sqrt(alpha), mp.sqrt(beta)
        return _bound(
            "merge",
            (sqrt_alpha + sqrt_beta) ** 2,
            alpha=mp.nstr(alpha, 15),
            beta=mp.nstr(beta, 15),
            sqrt_alpha=mp.nstr(sqrt_alpha, 15),
            sqrt_beta=mp.nstr(sqrt_beta, 15),
        )


def layered_bound_root(layers: LayerComposition | Sequence[int]) -> int:
    """l_1 + l_m - m + 1 + 2 * (l_2 + ... + l_(m-1)); equals 2 * l_1 when m = 1."""
    sizes = _as_composition(layers).layer_sizes
    m = len(sizes)
    if m == 1:
        return 2 * sizes[0]
    return sizes[0] + sizes[-1] - m + 1 + 2 * sum(sizes[1:-1])


def layered_bound(layers: LayerComposition | Sequence[int]) -> BoundValue:
    """Upper bound on the Stanley-Wilf limit of (⊖^{l_1}1) ⊕ ... ⊕ (⊖^{l_m}1)."""
    sizes = _as_composition(layers).layer_sizes
    root = layered_bound_root(sizes)
    with _working_precision():
        return _bound(
            "layered",
            mpf(root) ** 2,
            layers=", ".join(str(s) for s in sizes),
            m=len(sizes),
            first=sizes[0],
            last=sizes[-1],
            middle=sum(sizes[1:-1]),
            root=root,
            known=(sizes[0] - 1) ** 2,
        )


def _recursive_root(sizes: tuple[int, ...], steps: list[str]) -> int:
    if len(sizes) == 1:
        return 2 * sizes[0]
    if len(sizes) == 2:
        return sizes[0] + sizes[1] - 1
    head = sizes[0] + sizes[1] - 1
    tail = _recursive_root(sizes[1:], steps)
    steps.append(f"root({', '.join(map(str, sizes))}) = {head} + {tail} = {head + tail}")
    return head + tail


def layered_bound_recursive_root(layers: LayerComposition | Sequence[int]) -> int:
    """The square root of the layered bound, unrolled through the merge recursion."""
    return _recursive_root(_as_composition(layers).layer_sizes, [])


def layered_bound_recursive(layers: LayerComposition | Sequence[int]) -> BoundValue:
    """
    The layered bound obtained by splitting off the first two layers at a time:
    sqrt(alpha(l_1..l_m)) <= (l_1 + l_2 - 1) + sqrt(alpha(l_2..l_m)).
    """
    sizes = _as_composition(layers).layer_sizes
    steps: list[str] = []
    root = _recursive_root(sizes, steps)
    steps.reverse()
    with _working_precision():
        return _bound("layered_recursive", mpf(root) ** 2, steps=steps)


def compositions(length: int) -> Iterator[tuple[int, ...]]:
    """All 2^(length-1) compositions of a positive integer."""
    if length < 1:
        raise InvalidInputError(f"Compositions need a positive length, got {length}")
    for cuts in product((False, True), repeat=length - 1):
        parts, size = [], 1
        for cut in cuts:
            if cut:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield tuple(parts)


def layered_corollary_check(length: int) -> bool:
    """True iff every layered pattern of this length has layered bound at most 4 * length^2."""
    worst = max(layered_bound_root(c) for c in compositions(length)) ** 2
    logger.debug("Largest layered bound at length %d: %d", length, worst)
    return worst <= 4 * length**2


def layered_lower_bound(length: int) -> BoundValue:
    """(l - 1)^2, the known lower bound for the limit of any layered pattern of length l."""
    if length < 1:
        raise InvalidInputError(f"Pattern length must be positive, got {length}")
    with _working_precision():
        return _bound("layered_lower", mpf(length - 1) ** 2, length=length)


def rho() -> BoundValue:
    """exp(pi * sqrt(2/3)) ≈ 13.001954."""
    with _working_precision():
        value = _rho()
        return _bound("rho", value, log_value=mp.nstr(mp.log(value), 15))


def _require_positive_k(k: int):
    if k < 1:
        raise PreconditionError(f"The partition bounds hold for k > 0, got k = {k}")


def partition_bound(k: int) -> BoundValue:
    """rho^sqrt(k) with the exact p(k) in the trace."""
    _require_positive_k(k)
    exact = partition_count(k)
    with _working_precision():
        log_bound = mp.pi * mp.sqrt(mpf(2 * k) / 3)
        return _bound(
            "partition",
            mp.exp(log_bound),
            k=k,
            exact=exact,
            log_exact=mp.nstr(mp.log(exact), 15),
            log_bound=mp.nstr(log_bound, 15),
        )


def partition_bound_holds(k: int) -> bool:
    """p(k) < rho^sqrt(k), compared as ln p(k) against pi * sqrt(2k/3)."""
    _require_positive_k(k)
    settings = get_settings()
    exact = partition_count(k)
    with mp.workdps(settings.precision_dps):
        slack = mp.pi * mp.sqrt(mpf(2 * k) / 3) - mp.log(exact)
        return slack > settings.log_tolerance


def q_bound(k: int) -> BoundValue:
    """(k+1) * rho^sqrt(2k), an upper bound on |Q(k)| for k > 0."""
    non_negative(k, "k")
    with _working_precision():
        value = (k + 1) * _rho() ** mp.sqrt(2 * k)
        return _bound("q_bound", value, k=k, exact=q_count(k))


def q_bound_holds(k: int) -> bool:
    """|Q(k)| < (k+1) * rho^sqrt(2k), compared in log space."""
    _require_positive_k(k)
    settings = get_settings()
    exact = q_count(k)
    with mp.workdps(settings.precision_dps):
        log_bound = mp.log(k + 1) + mp.sqrt(2 * k) * mp.log(_rho())
        return log_bound - mp.log(exact) > settings.log_tolerance


def conditional_1324_bound(n: int) -> BoundValue:
    """(1/4)(n^2 - n + 2)^2 * rho^(n sqrt(1 - 1/n)), valid if the increasing-columns conjecture holds."""
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    m = comb(n, 2)
    with _working_precision():
        value = mpf(n * n - n + 2) ** 2 / 4 * _rho() ** (n * mp.sqrt(1 - mpf(1) / n))
        return _bound(
            "conditional_1324",
            value,
            n=n,
            m=m,
            root=mp.nstr(mp.exp(mp.log(value) / n), 15),
        )


def conditional_1324_partial_sum(n: int) -> mpf:
    """sum over k <= C(n,2) of (k+1) * rho^sqrt(2k), the intermediate step of the bound."""
    m = comb(n, 2)
    with _working_precision():
        rho_value = _rho()
        return mp.fsum((k + 1) * rho_value ** mp.sqrt(2 * k) for k in range(m + 1))


def s132_bound(n: int) -> BoundValue:
    """
    (m+1) p(m+1) with m = C(n,2). Exact while p(m+1) is computable, otherwise replaced by
    its upper bound (m+1) exp(pi sqrt(2(m+1)/3)).
    """
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    m = comb(n, 2)
    exact = m + 1 <= MAX_PARTITION_K
    with _working_precision():
        if exact:
            partitions = partition_count(m + 1)
            value = mpf((m + 1) * partitions)
        else:
            partitions = None
            value = (m + 1) * mp.exp(mp.pi * mp.sqrt(mpf(2 * (m + 1)) / 3))
        return _bound(
            "s132",
            value,
            n=n,
            m=m,
            exact=exact,
            partitions=partitions,
            root=mp.nstr(mp.exp(mp.log(value) / n), 15),
        )


def s132_column_sum_bound(n: int) -> BoundValue:
    """p(0) + p(1) + ... + p(C(n,2)): the sum of the eventual column values."""
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    m = comb(n, 2)
    values = [partition_count(k) for k in range(m + 1)]
    with _working_precision():
        terms = " + ".join(str(v) for v in values) if len(values) <= 12 else f"{len(values)} terms"
        return _bound("s132_column_sum", mpf(sum(values)), n=n, m=m, terms=terms)


def nth_root(bound: BoundValue, n: int) -> mpf:
    """bound^(1/n), the growth rate implied at length n."""
    with _working_precision():
        return mp.exp(mp.log(bound.value) / n)


def _ints(args: Sequence[str], what: str) -> list[int]:
    try:
        return [int(a) for a in args]
    except ValueError:
        raise InvalidInputError(f"{what} must be integers, got {' '.join(args)}") from None


def _one_int(args: Sequence[str], what: str) -> int:
    numbers = _ints(args, what)
    if len(numbers) != 1:
        raise InvalidInputError(f"Expected exactly one {what}, got {len(numbers)}")
    return numbers[0]


def _merge_args(args: Sequence[str]) -> BoundValue:
    if len(args) != 2:
        raise InvalidInputError("merge takes two growth rates ALPHA BETA")
    try:
        alpha, beta = (mpf(a) for a in args)
    except ValueError:
        raise InvalidInputError(f"Growth rates must be real numbers, got {' '.join(args)}") from None
    return sqrt_merge_combine(alpha, beta)


def _rho_args(args: Sequence[str]) -> BoundValue:
    if args:
        raise InvalidInputError("rho takes no arguments")
    return rho()


FORMULAS: dict[str, Callable[[Sequence[str]], BoundValue]] = {
    "merge": _merge_args,
    "layered": lambda args: layered_bound(_ints(args, "layer sizes")),
    "layered-recursive": lambda args: layered_bound_recursive(_ints(args, "layer sizes")),
    "layered-lower": lambda args: layered_lower_bound(_one_int(args, "length")),
    "rho": _rho_args,
    "partition": lambda args: partition_bound(_one_int(args, "k")),
    "q": lambda args: q_bound(_one_int(args, "k")),
    "conditional": lambda args: conditional_1324_bound(_one_int(args, "n")),
    "s132": lambda args: s132_bound(_one_int(args, "n")),
    "s132-sum": lambda args: s132_column_sum_bound(_one_int(args, "n")),
}


def evaluate_formula(name: str, args: Sequence[str]) -> BoundValue:
    """Evaluate a bound by its command name from text arguments, e.g. ("layered", ["1", "2", "1"])."""
    formula = FORMULAS.get(name)
    if formula is None:
        raise InvalidInputError(f"Unknown formula '{name}', expected one of {', '.join(FORMULAS)}")
    return formula(list(args))
