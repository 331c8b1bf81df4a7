"""Runtime settings loaded from METRIC_DIM_* environment variables and .env."""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Search caps and CLI defaults.

    Every field can be overridden by an environment variable with the
    METRIC_DIM_ prefix, e.g. METRIC_DIM_NAIVE_CAP=10.
    """

    model_config = SettingsConfigDict(
        env_prefix="METRIC_DIM_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    naive_cap: int = Field(12, ge=1, description="Vertex cap for the unpruned oracle")
    pruned_cap: int = Field(20, ge=1, description="Vertex cap for the twin-pruned search")
    canonical_cap: int = Field(10, ge=1, description="Vertex cap for canonical_form")
    enumerate_cap: int = Field(10, ge=4, description="Order cap for enumerate_n_minus_3")
    verify_max_n: int = Field(7, ge=1, description="Self-enumeration cap for verify")
    jobs: int | None = Field(None, ge=1, description="Worker count; None uses all CPUs")
    output_format: Literal["json", "tsv"] = "json"
    quiet: bool = False
    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    """Get the process-wide settings instance."""
    return Settings()
