# src/adapters/outbound/covariance/sparse_backend.py
from typing import Any

import numpy as np
from scipy import sparse

from core.ports.covariance_port import Layer


class SparseCovarianceBackend:
    """
    CSR covariance matrix for large combs.

    Every comb mode correlates with at most a handful of others, so each layer
    is assembled as one sparse symplectic matrix and applied as S cov S^T.
    """

    name = "sparse"

    def identity(self, size: int, scale: float) -> sparse.csr_array:
        return sparse.csr_array(scale * sparse.eye_array(size, format="csr"))

    def layer_matrix(self, size: int, layer: Layer) -> sparse.csr_array:
        """Direct sum of the layer's blocks, identity on untouched quadratures."""
        untouched = np.ones(size, dtype=bool)
        rows: list[np.ndarray] = []
        cols: list[np.ndarray] = []
        data: list[np.ndarray] = []
        for indices, block in layer:
            untouched[indices] = False
            rows.append(np.repeat(indices, len(indices)))
            cols.append(np.tile(indices, len(indices)))
            data.append(block.ravel())
        rest = np.flatnonzero(untouched)
        rows.append(rest)
        cols.append(rest)
        data.append(np.ones(len(rest)))
        matrix = sparse.coo_array(
            (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
            shape=(size, size),
        ).tocsr()
        matrix.eliminate_zeros()
        return matrix

    def apply_layer(self, cov: Any, layer: Layer) -> sparse.csr_array:
        symplectic = self.layer_matrix(cov.shape[0], layer)
        result = sparse.csr_array(symplectic @ cov @ symplectic.T)
        result.eliminate_zeros()
        return result

    def quadratic_forms(self, cov: Any, coefficients: Any) -> np.ndarray:
        product = sparse.csr_array(coefficients @ cov)
        return np.asarray(product.multiply(coefficients).sum(axis=1)).ravel()

    def to_dense(self, cov: Any) -> np.ndarray:
        return np.asarray(cov.toarray())

    def nonzero_entries(self, cov: Any) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        coo = sparse.coo_array(cov)
        return coo.row, coo.col, coo.data

    def relative_asymmetry(self, cov: Any) -> float:
        scale = float(abs(cov).max())
        if not scale:
            return 0.0
        return float(abs(cov - cov.T).max()) / scale

    def nbytes(self, cov: Any) -> int:
        csr = sparse.csr_array(cov)
        return int(csr.data.nbytes + csr.indices.nbytes + csr.indptr.nbytes)
