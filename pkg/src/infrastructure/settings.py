# src/infrastructure/settings.py
from functools import lru_cache
from typing import Any

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class EngineSettings(BaseSettings):
    """Numerical tolerances and engine switches, overridable per run."""

    model_config = SettingsConfigDict(env_prefix="QOFC_", extra="forbid")

    symmetry_tol: float = Field(default=1e-12, gt=0)
    symplectic_tol: float = Field(default=1e-12, gt=0)
    purity_tol: float = Field(default=1e-9, gt=0)
    dense_threshold: int = Field(default=512, ge=1)
    log_level: str = "INFO"
    log_json: bool = True


@lru_cache(maxsize=1)
def get_settings() -> EngineSettings:
    """Return the environment-derived settings."""
    return EngineSettings()


def settings_with_overrides(overrides: dict[str, Any] | None) -> EngineSettings:
    """
    Build settings where explicit overrides win over environment values.

    Args:
        overrides: Field values from the run file's tolerances section

    Returns:
        EngineSettings instance
    """
    if not overrides:
        return get_settings()
    return EngineSettings(**overrides)
