"""Configuration management for the matroid CSM toolkit.

This module provides runtime configuration using Pydantic Settings.
Configuration values can be set via environment variables (prefixed with
``MATROID_CSM_``) or a ``.env`` file in the working directory.

Example:
    Basic usage:
        >>> from matroid_csm.config import get_settings
        >>> settings = get_settings()
        >>> print(settings.seed_t)
        1000003

    Environment variable override:
        >>> import os
        >>> os.environ["MATROID_CSM_SEED_T"] = "7919"
        >>> get_settings.cache_clear()
        >>> print(get_settings().seed_t)
        7919

Note:
    The generic displacement parameter must stay an integer >= 2; every
    computation in the package is exact, so there is no tolerance setting.
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings and configuration.

    Attributes:
        app_name (str): Program name used in CLI help and reports.
        seed_t (int): Parameter t of the displacement vector (1, t, ..., t^n)
            used by stable intersection.
        generic_retries (int): How many times t is squared after a
            genericity failure before giving up.
        max_workers (int): Worker threads used by verification suites.
        default_max_size (int): Default ``--max-size`` of ``verify``.
        log_level (str): Logging level name for the CLI.
        debug (bool): Force DEBUG logging.

    Example:
        >>> settings = Settings(seed_t=101)
        >>> settings.generic_retries
        5
    """

    app_name: str = "matroid-csm"

    seed_t: int = Field(default=1_000_003, ge=2)
    generic_retries: int = Field(default=5, ge=0)

    max_workers: int = Field(default=4, ge=1)
    default_max_size: int = Field(default=6, ge=1, le=9)

    log_level: str = "WARNING"
    debug: bool = False

    model_config = SettingsConfigDict(
        env_prefix="MATROID_CSM_",
        env_file=".env",
        extra="ignore",
    )

    @property
    def effective_log_level(self) -> str:
        return "DEBUG" if self.debug else self.log_level.upper()


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
