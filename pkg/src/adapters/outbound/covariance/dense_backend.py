# src/adapters/outbound/covariance/dense_backend.py
from typing import Any

import numpy as np

from core.ports.covariance_port import Layer


class DenseCovarianceBackend:
    """Full 2M x 2M numpy covariance matrix."""

    name = "dense"

    def identity(self, size: int, scale: float) -> np.ndarray:
        return scale * np.eye(size)

    def apply_layer(self, cov: Any, layer: Layer) -> np.ndarray:
        result = np.array(cov, dtype=float, copy=True)
        for indices, block in layer:
            result[indices, :] = block @ result[indices, :]
            result[:, indices] = result[:, indices] @ block.T
        return result

    def quadratic_forms(self, cov: Any, coefficients: Any) -> np.ndarray:
        product = coefficients @ cov
        return np.asarray(coefficients.multiply(product).sum(axis=1)).ravel()

    def to_dense(self, cov: Any) -> np.ndarray:
        return np.array(cov, copy=True)

    def nonzero_entries(self, cov: Any) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        rows, cols = np.nonzero(cov)
        return rows, cols, cov[rows, cols]

    def relative_asymmetry(self, cov: Any) -> float:
        scale = float(np.max(np.abs(cov)))
        return float(np.max(np.abs(cov - cov.T))) / scale if scale else 0.0

    def nbytes(self, cov: Any) -> int:
        return int(cov.nbytes)
