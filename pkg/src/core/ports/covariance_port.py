# src/core/ports/covariance_port.py
from typing import Any, Protocol

import numpy as np

# (quadrature indices, symplectic block) pairs acting on disjoint index sets.
Layer = list[tuple[np.ndarray, np.ndarray]]


class CovarianceBackendPort(Protocol):
    """Port for covariance-matrix storage and arithmetic."""

    name: str

    def identity(self, size: int, scale: float) -> Any:
        """
        Create scale * identity of the given size.

        Args:
            size: Number of quadratures (2M)
            scale: Diagonal value

        Returns:
            Backend-native covariance matrix
        """
        ...

    def apply_layer(self, cov: Any, layer: Layer) -> Any:
        """
        Apply S cov S^T for a direct sum of blocks that is identity elsewhere.

        Args:
            cov: Backend-native covariance matrix
            layer: Disjoint (indices, block) pairs

        Returns:
            New covariance matrix; `cov` is left untouched
        """
        ...

    def quadratic_forms(self, cov: Any, coefficients: Any) -> np.ndarray:
        """
        Evaluate c_k^T cov c_k for every row c_k of a sparse coefficient matrix.

        Args:
            cov: Backend-native covariance matrix
            coefficients: scipy sparse array of shape (K, 2M)

        Returns:
            Array of K variances
        """
        ...

    def to_dense(self, cov: Any) -> np.ndarray:
        """Return a dense copy of the covariance matrix."""
        ...

    def nonzero_entries(self, cov: Any) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Return (rows, cols, values) of all nonzero entries."""
        ...

    def relative_asymmetry(self, cov: Any) -> float:
        """Return max|cov - cov^T| divided by max|cov|."""
        ...

    def nbytes(self, cov: Any) -> int:
        """Return the storage footprint in bytes."""
        ...


class BackendResolverPort(Protocol):
    """Port for choosing a covariance backend by name and size."""

    def get(self, name: str) -> CovarianceBackendPort:
        """Return the backend registered under `name`."""
        ...

    def resolve(self, requested: str, modes: int) -> CovarianceBackendPort:
        """
        Pick the backend for a state of `modes` modes.

        Args:
            requested: "auto", "dense" or "sparse"
            modes: Number of modes M

        Returns:
            Covariance backend

        Raises:
            DenseSizeError: If dense storage is forced above the threshold
        """
        ...
