"""
Route for polynomial profile verification.
"""

from typing import Annotated

from fastapi import APIRouter, Depends, Query

from src.asymptotics import verify_profile
from src.perms import Perm
from src.service.app_state import AppState, get_app_state
from src.service.arg_checkers import at_most
from src.service.models import ProfileReport

router = APIRouter(tags=["profiles"])


@router.get(
    "/profiles/{pattern}",
    response_model=ProfileReport,
    summary="Verify a column profile",
    description="Fits s_{n,k}(pattern) for n = 1..nmax with a polynomial and compares it with the prediction.",
)
def profile(
    pattern: str,
    k: Annotated[int, Query(ge=0)],
    nmax: Annotated[int, Query(ge=1)],
    window: Annotated[int | None, Query(ge=2)] = None,
    state: AppState = Depends(get_app_state),
) -> ProfileReport:
    at_most(nmax, state.settings.api_max_nmax, "nmax")
    return verify_profile(Perm.parse(pattern), k, nmax, window=window)
