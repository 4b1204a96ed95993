# tests/services/gaussian/test_symplectic.py
import math

import numpy as np
import pytest

from services.gaussian import symplectic


class TestBlocks:
    """Test symplectic building blocks."""

    @pytest.mark.parametrize(
        "block",
        [
            symplectic.two_mode_squeeze_block(0.7),
            symplectic.beam_splitter_block(),
            symplectic.phase_shift_block(0.3),
        ],
    )
    def test_blocks_are_symplectic(self, block):
        """Test every block preserves the symplectic form with unit determinant."""
        assert symplectic.is_symplectic(block, 1e-12)
        assert np.linalg.det(block) == pytest.approx(1.0)

    @pytest.mark.parametrize("r", [3.0, 5.0, 6.0])
    def test_strong_squeezing_is_symplectic(self, r):
        """Test the check tolerates rounding that grows with e^2r."""
        block = symplectic.two_mode_squeeze_block(r)
        assert symplectic.is_symplectic(block, 1e-12)
        assert symplectic.block_scale(block) == pytest.approx(math.exp(2 * r))

    def test_scaling_is_not_symplectic(self):
        """Test a plain scaling fails the check."""
        assert not symplectic.is_symplectic(2.0 * np.eye(2), 1e-12)

    def test_beam_splitter_is_involution(self):
        """Test applying the splitter twice gives the identity."""
        block = symplectic.beam_splitter_block()
        np.testing.assert_allclose(block @ block, np.eye(4), atol=1e-15)

    def test_quarter_turn_is_exact(self):
        """Test a pi/2 rotation has exact zero and unit entries."""
        block = symplectic.phase_shift_block(math.pi / 2)
        assert block.tolist() == [[0.0, -1.0], [1.0, 0.0]]

    def test_zero_squeezing_is_identity(self):
        """Test r = 0 leaves the modes untouched."""
        np.testing.assert_array_equal(symplectic.two_mode_squeeze_block(0.0), np.eye(4))


class TestSymplecticEigenvalues:
    """Test the Williamson spectrum."""

    def test_vacuum(self):
        """Test the vacuum spectrum sits at the vacuum variance."""
        spectrum = symplectic.symplectic_eigenvalues(0.5 * np.eye(6))
        np.testing.assert_allclose(spectrum, 0.5)

    def test_thermal(self):
        """Test a thermal mode reports its own variance."""
        cov = np.diag([0.5, 2.0, 0.5, 2.0])
        np.testing.assert_allclose(symplectic.symplectic_eigenvalues(cov), [0.5, 2.0])

    def test_squeezed_pair_stays_pure(self):
        """Test two-mode squeezing keeps every eigenvalue at 1/2."""
        block = symplectic.two_mode_squeeze_block(1.2)
        cov = block @ (0.5 * np.eye(4)) @ block.T
        spectrum = symplectic.symplectic_eigenvalues(cov)
        np.testing.assert_allclose(spectrum, 0.5, atol=1e-12)
