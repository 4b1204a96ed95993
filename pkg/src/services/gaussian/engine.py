# src/services/gaussian/engine.py
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy import sparse

from core.entities.comb import CombSpec, ModeLabel, Polarization, PumpConfig
from core.entities.gaussian_state import V0, GaussianState, QuadratureCombination
from core.ports.covariance_port import BackendResolverPort, CovarianceBackendPort
from infrastructure.error_handling.exceptions import (
    DenseSizeError,
    DuplicateModeError,
    FrequencyMismatchError,
    InvariantViolationError,
    ModeRangeError,
    PumpConfigError,
)
from infrastructure.settings import EngineSettings
from services.comb.mode_arithmetic import epr_pairs
from services.gaussian import symplectic

logger = logging.getLogger(__name__)

# (modes the block acts on, symplectic block in block order)
ModeBlock = tuple[tuple[ModeLabel, ...], np.ndarray]


def shot_noise(obs: QuadratureCombination, vac_var: float = V0) -> float:
    """Variance of `obs` on the vacuum."""
    return vac_var * sum(q * q + p * p for q, p in obs.weights().values())


def ratio_to_db(ratio: float) -> float:
    return 10.0 * math.log10(ratio)


@dataclass
class GaussianEngine:
    """Covariance-matrix engine: vacuum, symplectic layers, quadratic forms."""

    backends: BackendResolverPort
    settings: EngineSettings

    def backend_of(self, state: GaussianState) -> CovarianceBackendPort:
        return self.backends.get(state.backend)

    def vacuum(
        self,
        modes: Sequence[ModeLabel],
        backend: str = "auto",
    ) -> GaussianState:
        """
        Vacuum state over `modes`.

        Raises:
            ModeRangeError: If no modes are given
            DuplicateModeError: If labels repeat
        """
        if not modes:
            raise ModeRangeError("a state needs at least one mode")
        if len(set(modes)) != len(modes):
            raise DuplicateModeError("mode labels must be unique")
        chosen = self.backends.resolve(backend, len(modes))
        return GaussianState(
            modes=tuple(modes),
            cov=chosen.identity(2 * len(modes), V0),
            backend=chosen.name,
        )

    def apply_layer(
        self,
        state: GaussianState,
        blocks: list[ModeBlock],
    ) -> GaussianState:
        """
        Apply a direct sum of symplectic blocks on disjoint modes.

        Raises:
            ModeRangeError: If a mode is not part of the state
            DuplicateModeError: If two blocks share a mode
            InvariantViolationError: If a block is not symplectic
        """
        checked: set[int] = set()
        layer = []
        used: set[ModeLabel] = set()
        for modes, block in blocks:
            if used.intersection(modes) or len(set(modes)) != len(modes):
                raise DuplicateModeError(f"modes {modes} act twice in one layer")
            used.update(modes)
            if id(block) not in checked:
                self._check_block(block)
                checked.add(id(block))
            layer.append((np.asarray(state.quadrature_indices(*modes)), block))
        cov = self.backend_of(state).apply_layer(state.cov, layer)
        return GaussianState(
            modes=state.modes,
            cov=cov,
            backend=state.backend,
            vac_var=state.vac_var,
            metadata=dict(state.metadata),
        )

    def _check_block(self, block: np.ndarray) -> None:
        tol = self.settings.symplectic_tol
        if not symplectic.is_symplectic(block, tol):
            raise InvariantViolationError("applied map is not symplectic")
        det_tol = max(tol, 1e-12) * 10 * symplectic.block_scale(block)
        if abs(np.linalg.det(block) - 1.0) > det_tol:
            raise InvariantViolationError("applied map does not have unit determinant")

    def two_mode_squeeze(
        self,
        state: GaussianState,
        a: ModeLabel,
        b: ModeLabel,
        r: float,
    ) -> GaussianState:
        if a == b:
            raise DuplicateModeError(
                f"two-mode squeezing needs distinct modes, got {a}",
            )
        return self.apply_layer(state, [((a, b), symplectic.two_mode_squeeze_block(r))])

    def beam_splitter(
        self,
        state: GaussianState,
        a: ModeLabel,
        b: ModeLabel,
        allow_cross_frequency: bool = False,
    ) -> GaussianState:
        """
        Polarization beam splitter between two modes of one frequency.

        Raises:
            FrequencyMismatchError: If the modes differ in frequency without override
        """
        if a == b:
            raise DuplicateModeError(f"beam splitter needs distinct modes, got {a}")
        if a.n != b.n and not allow_cross_frequency:
            raise FrequencyMismatchError(
                f"beam splitter across frequencies {a.n} and {b.n}",
            )
        return self.apply_layer(state, [((a, b), symplectic.beam_splitter_block())])

    def phase_shift(
        self,
        state: GaussianState,
        a: ModeLabel,
        phi: float,
    ) -> GaussianState:
        return self.apply_layer(state, [((a,), symplectic.phase_shift_block(phi))])

    def coefficient_matrix(
        self,
        state: GaussianState,
        observables: Sequence[QuadratureCombination],
    ) -> sparse.csr_array:
        """Rows c_k with c_k^T x = observable k over x = (Q_1..Q_M, P_1..P_M)."""
        rows: list[int] = []
        cols: list[int] = []
        data: list[float] = []
        size = state.mode_count
        for k, obs in enumerate(observables):
            for mode, (q, p) in obs.weights().items():
                i = state.position(mode)
                rows.extend((k, k))
                cols.extend((i, size + i))
                data.extend((q, p))
        return sparse.coo_array(
            (np.asarray(data, dtype=float), (np.asarray(rows), np.asarray(cols))),
            shape=(len(observables), 2 * size),
        ).tocsr()

    def variances(
        self,
        state: GaussianState,
        observables: Sequence[QuadratureCombination],
    ) -> np.ndarray:
        if not observables:
            return np.zeros(0)
        coefficients = self.coefficient_matrix(state, observables)
        return self.backend_of(state).quadratic_forms(state.cov, coefficients)

    def variance(self, state: GaussianState, obs: QuadratureCombination) -> float:
        return float(self.variances(state, [obs])[0])

    def squeezing_db(self, state: GaussianState, obs: QuadratureCombination) -> float:
        """Variance relative to the shot noise of the same combination, in dB."""
        return ratio_to_db(self.variance(state, obs) / shot_noise(obs, state.vac_var))

    def build_comb_state(
        self,
        pumps: PumpConfig,
        comb: CombSpec,
        backend: str = "auto",
    ) -> GaussianState:
        """
        OPO comb state after the polarization beam splitter.

        Both pumps squeeze their own polarization; the beam splitter then mixes
        z and y at every frequency.
        """
        state = self.vacuum(comb.modes(), backend)
        squeezers: list[ModeBlock] = []
        for pump in (Polarization.Z, Polarization.Y):
            block = symplectic.two_mode_squeeze_block(pumps.squeezing(pump))
            for a, b in epr_pairs(pumps.index(pump), comb):
                squeezers.append(((ModeLabel(a, pump), ModeLabel(b, pump)), block))
        state = self.apply_layer(state, squeezers)

        splitter = symplectic.beam_splitter_block()
        state = self.apply_layer(
            state,
            [
                ((ModeLabel(n, Polarization.Z), ModeLabel(n, Polarization.Y)), splitter)
                for n in comb.indices
            ],
        )
        state.metadata.update(
            {"p_z": pumps.p_z, "p_y": pumps.p_y, "r_z": pumps.r_z, "r_y": pumps.r_y},
        )
        logger.info(
            "Built comb state",
            extra={
                "modes": state.mode_count,
                "backend": state.backend,
                "pairs": len(squeezers),
            },
        )
        return state

    def fourier_shift(
        self,
        state: GaussianState,
        pumps: PumpConfig,
        comb: CombSpec,
    ) -> GaussianState:
        """
        pi/2 phase shift on both rails of every frequency in the Fourier class.

        Raises:
            PumpConfigError: If the pump indices are even
        """
        if not pumps.has_odd_pumps:
            raise PumpConfigError(
                f"the graph frame needs odd pump indices, got p_z={pumps.p_z}",
            )
        rotation = symplectic.phase_shift_block(math.pi / 2)
        blocks: list[ModeBlock] = [
            ((ModeLabel(n, pol),), rotation)
            for n in comb.indices
            if pumps.in_fourier_class(n)
            for pol in (Polarization.Z, Polarization.Y)
        ]
        shifted = self.apply_layer(state, blocks)
        shifted.metadata["fourier_shifted"] = True
        return shifted

    def build_graph_state(
        self,
        pumps: PumpConfig,
        comb: CombSpec,
        backend: str = "auto",
    ) -> GaussianState:
        state = self.build_comb_state(pumps, comb, backend)
        return self.fourier_shift(state, pumps, comb)

    def dense_cov(self, state: GaussianState) -> np.ndarray:
        """
        Dense copy of the covariance matrix.

        Raises:
            DenseSizeError: If the state is larger than the dense threshold
        """
        too_large = state.mode_count > self.settings.dense_threshold
        if too_large and state.backend != "dense":
            raise DenseSizeError(
                f"refusing a dense copy of {state.mode_count} modes",
            )
        return self.backend_of(state).to_dense(state.cov)

    def symplectic_eigenvalues(self, state: GaussianState) -> np.ndarray:
        return symplectic.symplectic_eigenvalues(self.dense_cov(state))

    def is_symmetric(self, state: GaussianState) -> bool:
        asymmetry = self.backend_of(state).relative_asymmetry(state.cov)
        return asymmetry <= self.settings.symmetry_tol

    def is_physical(self, state: GaussianState) -> bool:
        """Every symplectic eigenvalue at or above the vacuum variance."""
        spectrum = self.symplectic_eigenvalues(state)
        return bool(np.all(spectrum >= state.vac_var - self.settings.purity_tol))

    def is_pure(self, state: GaussianState) -> bool:
        spectrum = self.symplectic_eigenvalues(state)
        tol = self.settings.purity_tol
        return bool(np.allclose(spectrum, state.vac_var, rtol=0.0, atol=tol))

    def covariance_dump(
        self,
        state: GaussianState,
    ) -> tuple[np.ndarray, dict[str, Any]]:
        """Full matrix plus the metadata written next to it."""
        metadata = {
            "M": state.mode_count,
            "modes": [str(mode) for mode in state.modes],
            "v0": state.vac_var,
            "ordering": "Q_1..Q_M,P_1..P_M",
            **state.metadata,
        }
        return self.dense_cov(state), metadata
