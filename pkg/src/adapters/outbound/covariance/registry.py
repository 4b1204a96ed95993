# src/adapters/outbound/covariance/registry.py
import logging

from adapters.outbound.covariance.dense_backend import DenseCovarianceBackend
from adapters.outbound.covariance.sparse_backend import SparseCovarianceBackend
from core.ports.covariance_port import CovarianceBackendPort
from infrastructure.error_handling.exceptions import (
    ConfigValidationError,
    DenseSizeError,
)

logger = logging.getLogger(__name__)

BACKEND_CHOICES = ("auto", "dense", "sparse")


class CovarianceBackendRegistry:
    """Resolves backend names to covariance backends."""

    def __init__(self, dense_threshold: int):
        """
        Initialize registry with the built-in backends.

        Args:
            dense_threshold: Largest mode count stored densely
        """
        self.dense_threshold = dense_threshold
        self._backends: dict[str, CovarianceBackendPort] = {}
        self.register(DenseCovarianceBackend())
        self.register(SparseCovarianceBackend())

    def register(self, backend: CovarianceBackendPort) -> None:
        """Register a custom backend under its name."""
        self._backends[backend.name] = backend

    def get(self, name: str) -> CovarianceBackendPort:
        try:
            return self._backends[name]
        except KeyError as e:
            raise ConfigValidationError(f"Unknown backend: {name}") from e

    def resolve(self, requested: str, modes: int) -> CovarianceBackendPort:
        """
        Pick the backend for a state of `modes` modes.

        Raises:
            DenseSizeError: If dense storage is forced above the threshold
        """
        if requested == "auto":
            requested = "dense" if modes <= self.dense_threshold else "sparse"
        elif requested == "dense" and modes > self.dense_threshold:
            raise DenseSizeError(
                f"dense backend refused for {modes} modes "
                f"(threshold {self.dense_threshold})",
            )
        backend = self.get(requested)
        logger.debug(
            "Resolved backend",
            extra={"backend": backend.name, "modes": modes},
        )
        return backend
