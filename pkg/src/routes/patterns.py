"""
Routes for avoider counts, inversion triangles and their columns.
"""

import logging
from typing import Annotated

from fastapi import APIRouter, Depends, Query

from src.enumeration import count_avoiders, mahonian_count
from src.perms import Perm
from src.service.app_state import AppState, cached_triangle, get_app_state
from src.service.models import ColumnResponse, CountResponse, MahonianResponse, TriangleResponse

logger = logging.getLogger(__name__)

router = APIRouter(tags=["patterns"])

_NonNegative = Annotated[int, Query(ge=0)]

# mahonian_row(n) costs O(n^4).
MAHONIAN_MAX_N = 60


@router.get(
    "/patterns/{pattern}/count",
    response_model=CountResponse,
    summary="Count avoiders",
    description="Returns s_n(pattern), the number of permutations of length n avoiding the pattern.",
)
def count(pattern: str, n: _NonNegative, state: AppState = Depends(get_app_state)) -> CountResponse:
    tau = Perm.parse(pattern)
    if n == 0:
        total = count_avoiders(tau, 0)
    else:
        total = sum(cached_triangle(state, tau, n).row(n))
    return CountResponse(pattern=str(tau), n=n, count=total)


@router.get(
    "/patterns/{pattern}/triangle",
    response_model=TriangleResponse,
    summary="Inversion triangle",
    description="Returns the number of avoiders of each length up to nmax by number of inversions.",
)
def triangle(
    pattern: str,
    nmax: _NonNegative,
    kmax: Annotated[int | None, Query(ge=0)] = None,
    state: AppState = Depends(get_app_state),
) -> TriangleResponse:
    tau = Perm.parse(pattern)
    result = cached_triangle(state, tau, nmax, kmax)
    return TriangleResponse(
        pattern=str(tau),
        n_max=result.n_max,
        k_max=result.k_max,
        rows=[list(row) for row in result.rows],
    )


@router.get(
    "/patterns/{pattern}/column",
    response_model=ColumnResponse,
    summary="Inversion triangle column",
    description="Returns s_{n,k}(pattern) for n = 1..nmax.",
)
def column(
    pattern: str, k: _NonNegative, nmax: _NonNegative, state: AppState = Depends(get_app_state)
) -> ColumnResponse:
    tau = Perm.parse(pattern)
    result = cached_triangle(state, tau, nmax, k)
    return ColumnResponse(pattern=str(tau), k=k, values=[result.entry(n, k) for n in range(1, nmax + 1)])


@router.get(
    "/mahonian",
    response_model=MahonianResponse,
    summary="Permutations by inversions",
    description="Returns the number of permutations of length n <= 60 with exactly k inversions.",
)
def mahonian(n: Annotated[int, Query(ge=0, le=MAHONIAN_MAX_N)], k: _NonNegative) -> MahonianResponse:
    return MahonianResponse(n=n, k=k, count=mahonian_count(n, k))
