"""
Route for the red-blue coloring trace.
"""

from fastapi import APIRouter

from src.coloring import PatternTriple, check_coloring_lemma
from src.perms import Perm
from src.service.models import ColoringReport, ColoringRequest

router = APIRouter(tags=["coloring"])


@router.post(
    "/coloring",
    response_model=ColoringReport,
    summary="Red-blue coloring",
    description="Colors a permutation against sigma, tau and rho and checks both color classes.",
)
def color(request: ColoringRequest) -> ColoringReport:
    triple = PatternTriple(Perm.parse(request.sigma), Perm.parse(request.tau), Perm.parse(request.rho))
    return check_coloring_lemma(Perm.parse(request.perm), triple)
