"""
Configuration file for environment variables

This module centralizes all environment variable loading and provides
a single source of truth for configuration across the application.
"""

import os
from typing import Optional
from dotenv import load_dotenv

from utils.constants import DEFAULT_SEED, DEFAULT_WORKERS, DEFAULT_LOG_LEVEL
from utils.exceptions import ConfigurationError

# Load environment variables from .env file
load_dotenv()


def _read_int(name: str, default: int) -> int:
    """Read an integer environment variable, falling back to a default."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw, 0)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer", context={'value': raw})


class Config:
    """Configuration class containing all environment variables."""

    # Verification
    SLICECALC_SEED: Optional[str] = os.getenv("SLICECALC_SEED")
    SLICECALC_WORKERS: Optional[str] = os.getenv("SLICECALC_WORKERS")

    # Logging
    SLICECALC_LOG_LEVEL: str = os.getenv("SLICECALC_LOG_LEVEL", DEFAULT_LOG_LEVEL)
    SLICECALC_LOG_FILE: Optional[str] = os.getenv("SLICECALC_LOG_FILE")

    @classmethod
    def get_seed(cls) -> int:
        """Get the default verification seed (SLICECALC_SEED overrides the built-in default)."""
        return _read_int("SLICECALC_SEED", DEFAULT_SEED)

    @classmethod
    def get_workers(cls) -> int:
        """Get the default number of worker threads for suite cases."""
        workers = _read_int("SLICECALC_WORKERS", DEFAULT_WORKERS)
        if workers < 1:
            raise ConfigurationError("SLICECALC_WORKERS must be positive", context={'value': workers})
        return workers

    @classmethod
    def get_log_level(cls) -> str:
        """Get the console log level."""
        return os.getenv("SLICECALC_LOG_LEVEL", cls.SLICECALC_LOG_LEVEL).upper()

    @classmethod
    def get_log_file(cls) -> Optional[str]:
        """Get the log file path, None when file logging is disabled."""
        return os.getenv("SLICECALC_LOG_FILE", cls.SLICECALC_LOG_FILE) or None


# Convenience access to config instance
config = Config()
