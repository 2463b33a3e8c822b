"""
Application configuration using Pydantic Settings.

Loads environment variables from .env file and provides type-safe access.
Experiment parameters live in config files (see advice_rl.harness.models);
this module only holds process-level settings.
"""

from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-level settings."""

    # === Output ===
    ADVICE_RL_OUT: str = "results"

    # === Execution ===
    DEFAULT_JOBS: int = 1

    # === Logging ===
    LOG_LEVEL: str = "INFO"
    LOG_FILE_PATH: Optional[str] = None  # e.g. logs/advice_rl.log

    # === Development ===
    DEBUG: bool = False

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore"
    )

    @property
    def effective_jobs(self) -> int:
        """Worker count never below one."""
        return max(1, self.DEFAULT_JOBS)


# Global settings instance
settings = Settings()
