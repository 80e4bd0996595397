"""
Process-level settings.

Reads the EIGENMARK_* environment variables once and exposes them as a
typed settings object shared by the CLI, the logger and the evaluation
worker pool.
"""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


class EigenmarkSettings(BaseSettings):
    """
    Settings resolved from the environment.

    Attributes:
        config: Default tool config path used when a subcommand gets no
            --config flag (EIGENMARK_CONFIG).
        log_level: Default logging level name (EIGENMARK_LOG_LEVEL).
        workers: Process pool size for evaluation cells (EIGENMARK_WORKERS);
            1 runs everything in-process.
    """

    model_config = SettingsConfigDict(env_prefix="EIGENMARK_", extra="ignore")

    config: Optional[Path] = Field(None, description="Default tool config path")
    log_level: str = Field("INFO", description="Default logging level")
    workers: int = Field(1, ge=1, description="Evaluation worker processes")

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in _LOG_LEVELS:
            raise ValueError(f"Unknown log level: {value}")
        return level


@lru_cache(maxsize=1)
def get_settings() -> EigenmarkSettings:
    """
    Get the process settings, reading the environment on first use.

    Returns:
        Cached EigenmarkSettings instance.
    """
    return EigenmarkSettings()
