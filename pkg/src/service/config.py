"""
Configuration settings for the permutation pattern toolkit.
"""

import logging
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

APP_VERSION = "0.1.0"


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(value) if value and value.strip() else default


class Settings(BaseModel):
    """
    Application settings.
    """

    app_name: str = "Permutation Pattern Toolkit"
    app_description: str = (
        "Pattern-avoidance enumeration, inversion triangles and Stanley-Wilf bound calculators"
    )
    api_version: str = APP_VERSION
    log_level: str = Field(
        default_factory=lambda: os.getenv("LOG_LEVEL", "INFO"), description="Logging level"
    )
    jobs: int = Field(
        default_factory=lambda: _env_int("PERMKIT_JOBS", os.cpu_count() or 1),
        ge=1,
        description="Worker processes used for subtree enumeration",
    )
    split_depth: int = Field(
        default_factory=lambda: _env_int("PERMKIT_SPLIT_DEPTH", 4),
        ge=0,
        description="Prefix length at which the search tree is split into tasks",
    )
    poly_window: int = Field(
        default_factory=lambda: _env_int("PERMKIT_POLY_WINDOW", 3),
        ge=2,
        description="Constant finite differences required to declare a polynomial tail",
    )
    api_max_nmax: int = Field(
        default_factory=lambda: _env_int("PERMKIT_API_MAX_NMAX", 10),
        ge=1,
        description="Largest n_max the HTTP API will enumerate",
    )
    triangle_cache_size: int = Field(
        default_factory=lambda: _env_int("PERMKIT_TRIANGLE_CACHE_SIZE", 32),
        ge=1,
        description="Inversion triangles kept in the API cache",
    )
    precision_dps: int = Field(
        default_factory=lambda: _env_int("PERMKIT_PRECISION_DPS", 50),
        ge=15,
        description="Decimal digits of working precision for bound evaluation",
    )
    log_tolerance: float = Field(
        default=1e-9, description="Slack required by log-space inequality checks"
    )


@lru_cache()
def get_settings() -> Settings:
    """
    Get the application settings.

    Uses lru_cache so the environment and any .env file are read once.
    """
    load_dotenv()
    return Settings()


def configure_logging():
    """Configure logging for the application."""
    settings = get_settings()
    # logging.getLevelNamesMapping is Python 3.11+; _nameToLevel is the same mapping.
    level_names = getattr(logging, "getLevelNamesMapping", lambda: dict(logging._nameToLevel))()
    if settings.log_level.upper() not in level_names:
        logging.warning(
            "Unrecognized log level '%s'. Falling back to 'INFO'.",
            settings.log_level,
        )
    log_level = getattr(logging, settings.log_level.upper(), logging.INFO)
    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
