"""
Route for the bijections between pattern avoiders and partitions.
"""

from fastapi import APIRouter

from src.partitions import apply_bijection
from src.service.models import BijectionRequest, BijectionResponse

router = APIRouter(tags=["partitions"])


@router.post(
    "/bijections/{name}",
    response_model=BijectionResponse,
    summary="Apply a bijection",
    description="Runs 132-forward, 132-inverse, 1324-forward or 1324-inverse.",
)
def biject(name: str, request: BijectionRequest) -> BijectionResponse:
    return apply_bijection(name, request)
