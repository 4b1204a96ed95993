# src/core/entities/gaussian_state.py
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from core.entities.comb import ModeLabel
from infrastructure.error_handling.exceptions import (
    DuplicateModeError,
    InvariantViolationError,
    ModeRangeError,
)

# Single-quadrature vacuum variance for Q = (a + a^dagger) / sqrt(2).
V0 = 0.5

Q_ANGLE = 0.0
P_ANGLE = math.pi / 2


@dataclass(frozen=True)
class QuadratureTerm:
    """coefficient * A(angle) on one mode, A(theta) = Q cos(theta) + P sin(theta)."""

    mode: ModeLabel
    angle: float
    coefficient: float

    @property
    def q_weight(self) -> float:
        if self.angle == Q_ANGLE:
            return self.coefficient
        if self.angle == P_ANGLE:
            return 0.0
        return self.coefficient * math.cos(self.angle)

    @property
    def p_weight(self) -> float:
        if self.angle == Q_ANGLE:
            return 0.0
        if self.angle == P_ANGLE:
            return self.coefficient
        return self.coefficient * math.sin(self.angle)


@dataclass(frozen=True)
class QuadratureCombination:
    """Real linear combination of generalized mode quadratures."""

    terms: tuple[QuadratureTerm, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if not any(term.coefficient != 0 for term in self.terms):
            raise InvariantViolationError(
                f"combination {self.label!r} has no nonzero coefficient",
            )

    @classmethod
    def of(
        cls,
        terms: list[tuple[ModeLabel, float, float]],
        label: str = "",
    ) -> "QuadratureCombination":
        return cls(
            tuple(QuadratureTerm(mode, angle, coeff) for mode, angle, coeff in terms),
            label,
        )

    @property
    def modes(self) -> set[ModeLabel]:
        return {term.mode for term in self.terms}

    def weights(self) -> dict[ModeLabel, tuple[float, float]]:
        """Accumulated (Q, P) weights per mode."""
        result: dict[ModeLabel, tuple[float, float]] = {}
        for term in self.terms:
            q, p = result.get(term.mode, (0.0, 0.0))
            result[term.mode] = (q + term.q_weight, p + term.p_weight)
        return result

    def rotated(self, phi: float) -> "QuadratureCombination":
        """Advance every term's angle by phi."""
        return QuadratureCombination(
            tuple(
                QuadratureTerm(t.mode, t.angle + phi, t.coefficient) for t in self.terms
            ),
            self.label,
        )

    def combine(
        self,
        other: "QuadratureCombination",
        weight: float,
        other_weight: float,
        label: str = "",
    ) -> "QuadratureCombination":
        """weight * self + other_weight * other, merged per mode in Q/P form."""
        merged: dict[ModeLabel, list[float]] = {}
        for source, scale in ((self, weight), (other, other_weight)):
            for mode, (q, p) in source.weights().items():
                slot = merged.setdefault(mode, [0.0, 0.0])
                slot[0] += scale * q
                slot[1] += scale * p
        terms: list[QuadratureTerm] = []
        for mode in sorted(merged, key=lambda m: m.sort_key):
            q, p = merged[mode]
            if q != 0:
                terms.append(QuadratureTerm(mode, Q_ANGLE, q))
            if p != 0:
                terms.append(QuadratureTerm(mode, P_ANGLE, p))
        return QuadratureCombination(tuple(terms), label)

    def describe(self) -> str:
        parts = []
        for term in self.terms:
            quad = (
                "Q"
                if term.angle == Q_ANGLE
                else "P" if term.angle == P_ANGLE else f"A({term.angle:.6g})"
            )
            parts.append(f"{term.coefficient:+.6g}*{quad}[{term.mode}]")
        return " ".join(parts)


@dataclass
class GaussianState:
    """
    Zero-mean Gaussian state over M modes.

    The covariance matrix is ordered (Q_1..Q_M, P_1..P_M) and is either a dense
    numpy array or a scipy sparse array, tagged by `backend`.
    """

    modes: tuple[ModeLabel, ...]
    cov: Any
    backend: str
    vac_var: float = V0
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(set(self.modes)) != len(self.modes):
            raise DuplicateModeError("mode labels must be unique")

    @cached_property
    def index(self) -> dict[ModeLabel, int]:
        return {mode: i for i, mode in enumerate(self.modes)}

    @property
    def mode_count(self) -> int:
        return len(self.modes)

    def position(self, mode: ModeLabel) -> int:
        try:
            return self.index[mode]
        except KeyError as e:
            raise ModeRangeError(f"mode {mode} is not part of this state") from e

    def quadrature_indices(self, *modes: ModeLabel) -> list[int]:
        """Q indices of `modes` followed by their P indices."""
        positions = [self.position(mode) for mode in modes]
        return positions + [self.mode_count + i for i in positions]
