# tests/services/gaussian/test_engine.py
import math

import numpy as np
import pytest

from core.entities.comb import CombSpec, ModeLabel, Polarization, PumpConfig
from core.entities.gaussian_state import P_ANGLE, Q_ANGLE, QuadratureCombination
from core.use_cases.benchmark_scale import comb_for_modes
from infrastructure.error_handling.exceptions import (
    DenseSizeError,
    DuplicateModeError,
    FrequencyMismatchError,
    InvariantViolationError,
    ModeRangeError,
    PumpConfigError,
)
from services.gaussian.engine import ratio_to_db, shot_noise
from tests.conftest import RAW_R, RAW_RATIO, make_engine

A = ModeLabel(0, Polarization.Z)
B = ModeLabel(1, Polarization.Z)
A_Y = ModeLabel(0, Polarization.Y)


def q_difference() -> QuadratureCombination:
    return QuadratureCombination.of([(A, Q_ANGLE, 1.0), (B, Q_ANGLE, -1.0)])


def q_sum() -> QuadratureCombination:
    return QuadratureCombination.of([(A, Q_ANGLE, 1.0), (B, Q_ANGLE, 1.0)])


class TestVacuum:
    """Test vacuum preparation and quadratic forms."""

    def test_single_mode(self, engine):
        """Test the vacuum covariance is 1/2 times the identity."""
        state = engine.vacuum([A])
        np.testing.assert_array_equal(engine.dense_cov(state), 0.5 * np.eye(2))
        q_a = QuadratureCombination.of([(A, Q_ANGLE, 1.0)])
        assert engine.variance(state, q_a) == 0.5

    def test_four_mode_sum(self, engine):
        """Test a sum of four Q quadratures has variance 2 on the vacuum."""
        modes = CombSpec(n_min=0, n_max=1).modes()
        state = engine.vacuum(modes)
        obs = QuadratureCombination.of([(mode, Q_ANGLE, 1.0) for mode in modes])
        assert engine.dense_cov(state).shape == (8, 8)
        assert engine.variance(state, obs) == pytest.approx(2.0)
        assert shot_noise(obs) == pytest.approx(2.0)

    def test_empty_rejected(self, engine):
        """Test a state needs at least one mode."""
        with pytest.raises(ModeRangeError):
            engine.vacuum([])

    def test_duplicates_rejected(self, engine):
        """Test repeated labels are rejected."""
        with pytest.raises(DuplicateModeError):
            engine.vacuum([A, A])

    def test_ratio_to_db(self):
        """Test the dB conversion."""
        assert ratio_to_db(1.0) == 0.0
        assert ratio_to_db(RAW_RATIO) == pytest.approx(-3.2)


class TestGates:
    """Test symplectic gates applied through the engine."""

    def test_two_mode_squeezing(self, engine):
        """Test r = 1 squeezes Q_a - Q_b to e^-2 and stretches Q_a + Q_b to e^2."""
        state = engine.two_mode_squeeze(engine.vacuum([A, B]), A, B, 1.0)
        squeezed = engine.variance(state, q_difference())
        assert squeezed == pytest.approx(math.exp(-2), rel=1e-12)
        assert engine.variance(state, q_sum()) == pytest.approx(math.exp(2), rel=1e-12)

    def test_raw_squeezing_is_minus_three_point_two_db(self, engine):
        """Test r = 0.16 ln 10 gives -3.2 dB on the pair nullifier."""
        state = engine.two_mode_squeeze(engine.vacuum([A, B]), A, B, RAW_R)
        db = engine.squeezing_db(state, q_difference())
        assert db == pytest.approx(-3.2, abs=1e-12)

    def test_zero_squeezing_is_identity(self, engine):
        """Test r = 0 leaves the vacuum untouched."""
        state = engine.two_mode_squeeze(engine.vacuum([A, B]), A, B, 0.0)
        np.testing.assert_allclose(engine.dense_cov(state), 0.5 * np.eye(4))

    def test_squeezing_needs_distinct_modes(self, engine):
        """Test a two-mode gate on one mode is rejected."""
        with pytest.raises(DuplicateModeError):
            engine.two_mode_squeeze(engine.vacuum([A, B]), A, A, 0.5)

    def test_unknown_mode(self, engine):
        """Test a gate on a foreign mode raises ModeRangeError."""
        foreign = ModeLabel(9, Polarization.Z)
        with pytest.raises(ModeRangeError):
            engine.two_mode_squeeze(engine.vacuum([A, B]), A, foreign, 0.5)

    def test_beam_splitter_twice_is_identity(self, engine):
        """Test the polarization beam splitter is its own inverse."""
        state = engine.two_mode_squeeze(engine.vacuum([A, A_Y, B]), A, B, 0.8)
        twice = engine.beam_splitter(engine.beam_splitter(state, A, A_Y), A, A_Y)
        np.testing.assert_allclose(
            engine.dense_cov(twice),
            engine.dense_cov(state),
            atol=1e-12,
        )

    def test_beam_splitter_on_vacuum(self, engine):
        """Test the splitter leaves the vacuum unchanged."""
        state = engine.beam_splitter(engine.vacuum([A, A_Y]), A, A_Y)
        np.testing.assert_allclose(engine.dense_cov(state), 0.5 * np.eye(4), atol=1e-15)

    def test_beam_splitter_across_frequencies(self, engine):
        """Test mixing two frequencies needs the explicit override."""
        state = engine.vacuum([A, B])
        with pytest.raises(FrequencyMismatchError):
            engine.beam_splitter(state, A, B)
        mixed = engine.beam_splitter(state, A, B, allow_cross_frequency=True)
        np.testing.assert_allclose(engine.dense_cov(mixed), 0.5 * np.eye(4), atol=1e-15)

    def test_quarter_turn_moves_squeezing_to_mixed_quadratures(self, engine):
        """Test a pi/2 shift on one arm turns P_a + P_b into Q_a - P_b."""
        state = engine.two_mode_squeeze(engine.vacuum([A, B]), A, B, 1.0)
        shifted = engine.phase_shift(state, A, math.pi / 2)
        obs = QuadratureCombination.of([(A, Q_ANGLE, 1.0), (B, P_ANGLE, -1.0)])
        assert engine.variance(shifted, obs) == pytest.approx(math.exp(-2), rel=1e-12)

    def test_full_turn_is_identity(self, engine):
        """Test four quarter turns restore the state."""
        state = engine.two_mode_squeeze(engine.vacuum([A, B]), A, B, 0.6)
        turned = state
        for _ in range(4):
            turned = engine.phase_shift(turned, A, math.pi / 2)
        np.testing.assert_allclose(
            engine.dense_cov(turned),
            engine.dense_cov(state),
            atol=1e-12,
        )

    def test_non_symplectic_block_rejected(self, engine):
        """Test a non-symplectic map raises InvariantViolationError."""
        with pytest.raises(InvariantViolationError):
            engine.apply_layer(engine.vacuum([A]), [((A,), 2.0 * np.eye(2))])

    def test_overlapping_blocks_rejected(self, engine):
        """Test two blocks of one layer may not share a mode."""
        rotation = np.eye(2)
        blocks = [((A,), rotation), ((A,), rotation)]
        with pytest.raises(DuplicateModeError):
            engine.apply_layer(engine.vacuum([A, B]), blocks)


class TestCombState:
    """Test the comb state after the beam splitter."""

    def test_zero_squeezing_gives_vacuum(self, engine, comb):
        """Test r = 0 pumps leave the comb in vacuum."""
        state = engine.build_comb_state(PumpConfig(p_z=1, p_y=-1), comb)
        vacuum = 0.5 * np.eye(120)
        np.testing.assert_allclose(engine.dense_cov(state), vacuum, atol=1e-15)

    @pytest.mark.parametrize("r", [5.0, 6.0])
    def test_strong_squeezing_builds(self, engine, comb, r):
        """Test large squeezing parameters pass the symplectic checks."""
        pumps = PumpConfig(p_z=1, p_y=-1, r_z=r, r_y=r)
        state = engine.build_comb_state(pumps, comb)
        assert state.mode_count == 60
        assert engine.is_symmetric(state)

    def test_symmetric_pure_physical(self, engine, comb_state):
        """Test the comb state is symmetric, pure and physical."""
        assert comb_state.backend == "dense"
        assert engine.is_symmetric(comb_state)
        assert engine.is_pure(comb_state)
        assert engine.is_physical(comb_state)

    def test_metadata(self, comb_state, pumps):
        """Test the state records its pump configuration."""
        assert comb_state.metadata["p_z"] == pumps.p_z
        assert comb_state.metadata["r_y"] == pumps.r_y

    def test_dense_and_sparse_agree(self, engine, pumps, comb):
        """Test both backends produce the same covariance at 256 modes."""
        big = comb_for_modes(256, comb)
        dense = engine.build_comb_state(pumps, big, "dense")
        sparse = engine.build_comb_state(pumps, big, "sparse")
        assert dense.mode_count == 256
        assert sparse.backend == "sparse"
        assert engine.is_symmetric(sparse)
        np.testing.assert_allclose(
            engine.dense_cov(dense),
            engine.dense_cov(sparse),
            rtol=0.0,
            atol=1e-12,
        )

    def test_auto_switches_to_sparse(self, pumps):
        """Test auto storage goes sparse above the dense threshold."""
        engine = make_engine(dense_threshold=8)
        state = engine.build_comb_state(pumps, CombSpec(n_min=-3, n_max=2))
        assert state.backend == "sparse"
        with pytest.raises(DenseSizeError):
            engine.dense_cov(state)

    def test_forced_dense_above_threshold(self, pumps):
        """Test forcing dense storage above the threshold is refused."""
        engine = make_engine(dense_threshold=8)
        with pytest.raises(DenseSizeError):
            engine.build_comb_state(pumps, CombSpec(n_min=-3, n_max=2), "dense")

    def test_fourier_shift_needs_odd_pumps(self, engine):
        """Test the graph frame is refused for even pump indices."""
        pumps = PumpConfig(p_z=2, p_y=0, r_z=0.3, r_y=0.3)
        comb = CombSpec(n_min=-3, n_max=3)
        state = engine.build_comb_state(pumps, comb)
        with pytest.raises(PumpConfigError):
            engine.fourier_shift(state, pumps, comb)

    def test_graph_state_stays_pure(self, engine, graph_state):
        """Test the Fourier shift preserves purity."""
        assert graph_state.metadata["fourier_shifted"] is True
        assert engine.is_pure(graph_state)

    def test_covariance_dump(self, engine, comb_state):
        """Test the dump returns the matrix and its metadata."""
        matrix, metadata = engine.covariance_dump(comb_state)
        assert matrix.shape == (120, 120)
        assert metadata["M"] == 60
        assert metadata["modes"][:2] == ["-15z", "-15y"]
        assert metadata["ordering"] == "Q_1..Q_M,P_1..P_M"
