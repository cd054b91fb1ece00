"""
Route for the bound formulas.
"""

from typing import Annotated

from fastapi import APIRouter, Query

from src.bounds import evaluate_formula
from src.service.models import BoundResponse

router = APIRouter(tags=["bounds"])


@router.get(
    "/bounds/{formula}",
    response_model=BoundResponse,
    summary="Evaluate a bound",
    description=(
        "Evaluates a bound formula such as layered, merge or conditional. Arguments are passed "
        "in order as repeated 'arg' parameters, e.g. /bounds/layered?arg=1&arg=2&arg=1."
    ),
)
def bound(formula: str, arg: Annotated[list[str], Query()] = []) -> BoundResponse:
    return evaluate_formula(formula, arg).to_model()
