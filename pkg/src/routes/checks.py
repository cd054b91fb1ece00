"""
Route for the exhaustive harnesses.
"""

import logging
from typing import Annotated

from fastapi import APIRouter, Depends, Query

from src.checks import get_harness, run_check
from src.service.app_state import AppState, get_app_state
from src.service.arg_checkers import at_most
from src.service.exceptions import CheckFailedError
from src.service.models import CheckReport

logger = logging.getLogger(__name__)

router = APIRouter(tags=["checks"])


def _limit(configured: int, harness_limit: int | None) -> int:
    return configured if harness_limit is None else min(configured, harness_limit)


@router.get(
    "/checks/{name}",
    response_model=CheckReport,
    summary="Run a harness",
    description=(
        "Runs an exhaustive harness and returns its report. Each harness has its own upper "
        "limits on nmax and kmax. With strict=true a failed harness is an error response instead."
    ),
)
def check(
    name: str,
    nmax: Annotated[int | None, Query(ge=0)] = None,
    kmax: Annotated[int | None, Query(ge=0)] = None,
    pattern: str | None = None,
    triple: Annotated[str | None, Query(description="sigma:tau:rho, e.g. 1:21:1")] = None,
    strict: bool = False,
    state: AppState = Depends(get_app_state),
) -> CheckReport:
    harness = get_harness(name)
    if nmax is not None:
        at_most(nmax, _limit(state.settings.api_max_nmax, harness.api_max_n), "nmax")
    if kmax is not None and harness.api_max_k is not None:
        at_most(kmax, harness.api_max_k, "kmax")
    report = run_check(name, n_max=nmax, k_max=kmax, pattern=pattern, triple=triple)
    if strict and not report.passed:
        raise CheckFailedError(f"{name} failed: {'; '.join(report.violations[:3])}")
    return report
