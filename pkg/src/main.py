"""
Main application module for the permutation pattern toolkit API.
"""

import logging

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.gzip import GZipMiddleware
from starlette.exceptions import HTTPException

from src.routes import bounds, checks, coloring, health, partitions, patterns, profiles, ratios
from src.service import app_state
from src.service.config import configure_logging, get_settings
from src.service.exception_handlers import universal_error_handler
from src.service.exceptions import PermKitError
from src.service.models import ErrorResponse

configure_logging()
logger = logging.getLogger(__name__)


def create_application() -> FastAPI:
    """Create and configure the FastAPI application."""
    settings = get_settings()

    app = FastAPI(
        title=settings.app_name,
        description=settings.app_description,
        version=settings.api_version,
        responses={
            "4XX": {"model": ErrorResponse},
            "5XX": {"model": ErrorResponse},
        },
    )

    for exc_class in (PermKitError, RequestValidationError, HTTPException, Exception):
        app.add_exception_handler(exc_class, universal_error_handler)

    app.add_middleware(GZipMiddleware)

    app.include_router(health.router)
    app.include_router(patterns.router)
    app.include_router(coloring.router)
    app.include_router(bounds.router)
    app.include_router(partitions.router)
    app.include_router(profiles.router)
    app.include_router(ratios.router)
    app.include_router(checks.router)

    async def startup_event():
        logger.info("Starting application")
        app_state.build_app(app)
        logger.info("Application started")

    app.add_event_handler("startup", startup_event)

    async def shutdown_event():
        logger.info("Shutting down application")
        app_state.destroy_app_state(app)
        logger.info("Application shut down")

    app.add_event_handler("shutdown", shutdown_event)

    return app
