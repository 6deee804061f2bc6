"""Application configuration using Pydantic Settings."""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Environment
    environment: Literal["development", "staging", "production"] = "development"
    debug: bool = True
    log_level: str = "INFO"

    # Group parameters
    default_params: str = Field(
        default="modp2048", description="Parameter set used when --params is not given"
    )

    # Network demo
    listen_host: str = "127.0.0.1"
    listen_port: int = Field(default=7461, description="Default TCP port for server and client")
    handshake_timeout_seconds: float = Field(
        default=10.0, description="Per-message read timeout during a handshake"
    )

    # Resilience settings
    connect_timeout_seconds: float = Field(
        default=5.0, description="Timeout for a single TCP connect attempt"
    )
    connect_retry_attempts: int = Field(
        default=3, description="Number of connect attempts before giving up"
    )
    connect_retry_min_wait: float = Field(
        default=0.05, description="Initial backoff between connect attempts (seconds)"
    )
    connect_retry_max_wait: float = Field(
        default=0.5, description="Maximum backoff between connect attempts (seconds)"
    )

    # Oracle harness
    oracle_trials: int = Field(default=100, description="Replay experiment trials")
    oracle_seed: int = Field(default=0, description="Seed for the oracle's deterministic RNG")


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


settings = get_settings()
