"""
Route for the share of permutations with k inversions that avoid a pattern.
"""

from typing import Annotated

from fastapi import APIRouter, Depends, Query

from src.asymptotics import ratio_report
from src.perms import Perm
from src.service.app_state import AppState, get_app_state
from src.service.arg_checkers import at_most
from src.service.models import RatioReport

router = APIRouter(tags=["ratios"])


@router.get(
    "/ratios/{pattern}",
    response_model=RatioReport,
    summary="Avoiding share of a column",
    description=(
        "Returns s_{n,k}(pattern) divided by the number of permutations of length n with k "
        "inversions for n = 1..nmax, the limit of that ratio and the avoiders of length nmax by core."
    ),
)
def ratios(
    pattern: str,
    k: Annotated[int, Query(ge=0)],
    nmax: Annotated[int, Query(ge=1)],
    state: AppState = Depends(get_app_state),
) -> RatioReport:
    at_most(nmax, state.settings.api_max_nmax, "nmax")
    return ratio_report(Perm.parse(pattern), k, nmax)
