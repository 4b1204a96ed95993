# src/services/gaussian/symplectic.py
"""Symplectic blocks in (Q_a, Q_b, P_a, P_b) block order."""

import math

import numpy as np


def symplectic_form(modes: int) -> np.ndarray:
    """Omega = [[0, I], [-I, 0]] for `modes` modes."""
    identity = np.eye(modes)
    zero = np.zeros((modes, modes))
    return np.block([[zero, identity], [-identity, zero]])


def two_mode_squeeze_block(r: float) -> np.ndarray:
    """Heisenberg map under which Q_a - Q_b and P_a + P_b scale by e^-r."""
    c, s = math.cosh(r), math.sinh(r)
    q_block = np.array([[c, s], [s, c]])
    p_block = np.array([[c, -s], [-s, c]])
    zero = np.zeros((2, 2))
    return np.block([[q_block, zero], [zero, p_block]])


def beam_splitter_block() -> np.ndarray:
    """(a, b) -> ((a + b)/sqrt2, (a - b)/sqrt2) on both quadratures."""
    h = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2)
    zero = np.zeros((2, 2))
    return np.block([[h, zero], [zero, h]])


def phase_shift_block(phi: float) -> np.ndarray:
    """Single-mode rotation: Q -> Q cos - P sin, P -> Q sin + P cos."""
    c, s = _snap(math.cos(phi)), _snap(math.sin(phi))
    return np.array([[c, -s], [s, c]])


def _snap(value: float) -> float:
    # multiples of pi/2 land exactly on 0 and +-1
    nearest = float(round(value))
    return nearest if abs(value - nearest) < 1e-15 else value


def block_scale(block: np.ndarray) -> float:
    """Squared spectral norm, floored at 1: rounding in S Omega S^T grows with it."""
    return max(1.0, float(np.linalg.norm(block, 2)) ** 2)


def is_symplectic(block: np.ndarray, tol: float) -> bool:
    """S Omega S^T == Omega on the block's own modes, to tol relative to |S|^2."""
    omega = symplectic_form(block.shape[0] // 2)
    atol = tol * block_scale(block)
    return bool(np.allclose(block @ omega @ block.T, omega, rtol=0.0, atol=atol))



def symplectic_eigenvalues(cov: np.ndarray) -> np.ndarray:
    """Williamson spectrum from |eig(i Omega cov)|, each value taken once."""
    omega = symplectic_form(cov.shape[0] // 2)
    spectrum = np.sort(np.abs(np.linalg.eigvals(1j * omega @ cov)))
    return spectrum[::2]
