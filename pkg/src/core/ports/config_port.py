# src/core/ports/config_port.py
from pathlib import Path
from typing import Any, Protocol

from core.entities.run_config import RunConfig


class ConfigPort(Protocol):
    """Port for loading and validating run configuration."""

    def load_run_config(
        self,
        path: Path | None,
        overrides: dict[str, Any] | None = None,
    ) -> RunConfig:
        """
        Load a run configuration and apply command-line overrides.

        Args:
            path: YAML run file, or None to start from built-in defaults
            overrides: Flag values keyed by dotted section path, e.g. "pumps.p_z"

        Returns:
            Validated RunConfig

        Raises:
            ConfigNotFoundError: If the run file doesn't exist
            ConfigValidationError: If the file or an override is invalid
        """
        ...
