# tests/core/entities/test_gaussian_state.py
import math

import numpy as np
import pytest

from core.entities.comb import ModeLabel, Polarization
from core.entities.gaussian_state import (
    P_ANGLE,
    Q_ANGLE,
    GaussianState,
    QuadratureCombination,
    QuadratureTerm,
)
from infrastructure.error_handling.exceptions import (
    DuplicateModeError,
    InvariantViolationError,
    ModeRangeError,
)

A = ModeLabel(0, Polarization.Z)
B = ModeLabel(0, Polarization.Y)


class TestQuadratureTerm:
    """Test QuadratureTerm weights."""

    def test_q_and_p_angles_are_exact(self):
        """Test angles 0 and pi/2 give exact Q and P weights."""
        term = QuadratureTerm(A, Q_ANGLE, 2.0)
        assert (term.q_weight, term.p_weight) == (2.0, 0.0)
        assert QuadratureTerm(A, P_ANGLE, -1.0).q_weight == 0.0
        assert QuadratureTerm(A, P_ANGLE, -1.0).p_weight == -1.0

    def test_generalized_angle(self):
        """Test A(theta) = Q cos(theta) + P sin(theta)."""
        term = QuadratureTerm(A, 0.3, 2.0)
        assert term.q_weight == pytest.approx(2.0 * math.cos(0.3))
        assert term.p_weight == pytest.approx(2.0 * math.sin(0.3))


class TestQuadratureCombination:
    """Test QuadratureCombination entity."""

    def test_all_zero_coefficients_rejected(self):
        """Test a combination needs one nonzero coefficient."""
        with pytest.raises(InvariantViolationError):
            QuadratureCombination.of([(A, Q_ANGLE, 0.0), (B, P_ANGLE, 0.0)])

    def test_weights_accumulate_per_mode(self):
        """Test repeated modes add their Q and P weights."""
        obs = QuadratureCombination.of(
            [(A, Q_ANGLE, 1.0), (A, P_ANGLE, 2.0), (A, Q_ANGLE, 0.5)],
        )
        assert obs.weights() == {A: (1.5, 2.0)}
        assert obs.modes == {A}

    def test_rotated_advances_angles(self):
        """Test rotating by pi/2 turns Q into P."""
        rotated = QuadratureCombination.of([(A, Q_ANGLE, 1.0)]).rotated(math.pi / 2)
        q, p = rotated.weights()[A]
        assert q == pytest.approx(0.0, abs=1e-15)
        assert p == pytest.approx(1.0)

    def test_combine_merges_in_qp_form(self):
        """Test weighted sums cancel and merge per mode."""
        first = QuadratureCombination.of([(A, Q_ANGLE, 1.0), (B, Q_ANGLE, 1.0)])
        second = QuadratureCombination.of([(A, Q_ANGLE, 1.0), (B, Q_ANGLE, -1.0)])
        merged = first.combine(second, 0.5, 0.5, "sum")
        assert merged.weights() == {A: (1.0, 0.0)}
        assert merged.label == "sum"

    def test_describe(self):
        """Test the text form names quadrature, coefficient and mode."""
        obs = QuadratureCombination.of([(A, Q_ANGLE, 1.0), (B, P_ANGLE, -0.5)])
        assert obs.describe() == "+1*Q[0z] -0.5*P[0y]"


class TestGaussianState:
    """Test GaussianState entity."""

    def test_duplicate_modes_rejected(self):
        """Test mode labels must be unique."""
        with pytest.raises(DuplicateModeError):
            GaussianState(modes=(A, A), cov=np.eye(4), backend="dense")

    def test_quadrature_indices(self):
        """Test Q indices come first, then P indices offset by M."""
        state = GaussianState(modes=(A, B), cov=0.5 * np.eye(4), backend="dense")
        assert state.quadrature_indices(B, A) == [1, 0, 3, 2]

    def test_unknown_mode(self):
        """Test looking up a foreign mode raises ModeRangeError."""
        state = GaussianState(modes=(A,), cov=0.5 * np.eye(2), backend="dense")
        with pytest.raises(ModeRangeError):
            state.position(B)
