"""
Application state information and retrieval functions.

All functions assume that the application state has been initialized via
calling the build_app() method.
"""

import logging
from typing import NamedTuple

from cacheout.lru import LRUCache
from fastapi import FastAPI, Request

from src.enumeration import InvTriangle, inversion_triangle
from src.perms import Perm
from src.service.arg_checkers import at_most
from src.service.config import Settings, get_settings

logger = logging.getLogger(__name__)


class AppState(NamedTuple):
    """Holds application state."""

    settings: Settings
    triangle_cache: LRUCache


def build_app(app: FastAPI) -> None:
    """
    Build the application state.

    Args:
        app: The FastAPI app.
    """
    logger.info("Initializing application state...")
    settings = get_settings()
    cache = LRUCache(maxsize=settings.triangle_cache_size)
    app.state._permkit_state = AppState(settings=settings, triangle_cache=cache)
    logger.info("Application state initialized, triangle cache size %d", settings.triangle_cache_size)


def destroy_app_state(app: FastAPI) -> None:
    """
    Destroy the application state, releasing cached triangles.

    Args:
        app: The FastAPI app.
    """
    state = getattr(app.state, "_permkit_state", None)
    if state:
        state.triangle_cache.clear()
    app.state._permkit_state = None
    logger.info("Application state destroyed")


def get_app_state(request: Request) -> AppState:
    """
    Get the application state from a request.

    Args:
        request: The FastAPI request.

    Returns:
        The application state.

    Raises:
        ValueError: If app state has not been initialized.
    """
    return _get_app_state_from_app(request.app)


def _get_app_state_from_app(app: FastAPI) -> AppState:
    if not getattr(app.state, "_permkit_state", None):
        raise ValueError("App state has not been initialized")
    return app.state._permkit_state


def cached_triangle(state: AppState, tau: Perm, n_max: int, k_max: int | None = None) -> InvTriangle:
    """
    The inversion triangle of tau up to n_max, enumerated at most once per cache lifetime.

    Raises:
        LimitExceededError: If n_max is above the configured API limit.
    """
    at_most(n_max, state.settings.api_max_nmax, "nmax")
    key = (tau, n_max, k_max)
    triangle = state.triangle_cache.get(key)
    if triangle is None:
        logger.debug("Triangle cache miss for %s, n_max=%d, k_max=%s", tau, n_max, k_max)
        triangle = inversion_triangle(tau, n_max, k_max=k_max)
        state.triangle_cache.set(key, triangle)
    return triangle
