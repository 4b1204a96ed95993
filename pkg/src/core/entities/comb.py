# src/core/entities/comb.py
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from infrastructure.error_handling.exceptions import ModeRangeError, PumpConfigError

EDGE_WEIGHT = Fraction(1, 2)


class Polarization(Enum):
    """Polarization before the beam splitter, rail label after it."""

    Z = "z"
    Y = "y"

    @property
    def other(self) -> "Polarization":
        return Polarization.Y if self is Polarization.Z else Polarization.Z

    @property
    def rank(self) -> int:
        return 0 if self is Polarization.Z else 1


@dataclass(frozen=True)
class ModeLabel:
    """One comb mode: frequency index n and polarization."""

    n: int
    pol: Polarization

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.n, self.pol.rank)

    def __str__(self) -> str:
        return f"{self.n}{self.pol.value}"


@dataclass(frozen=True)
class CombSpec:
    """Simulated slice of the quantum optical frequency comb."""

    n_min: int
    n_max: int
    delta_omega: float = 945.66e6
    omega0: float = 0.0

    def __post_init__(self) -> None:
        if self.delta_omega <= 0:
            raise PumpConfigError(
                f"delta_omega must be positive, got {self.delta_omega}",
            )
        if self.n_min >= self.n_max:
            raise PumpConfigError(
                f"n_min must be below n_max, got [{self.n_min}, {self.n_max}]",
            )

    @property
    def indices(self) -> range:
        return range(self.n_min, self.n_max + 1)

    @property
    def frequency_count(self) -> int:
        return self.n_max - self.n_min + 1

    @property
    def mode_count(self) -> int:
        return 2 * self.frequency_count

    def contains(self, n: int) -> bool:
        return self.n_min <= n <= self.n_max

    def require(self, *indices: int) -> None:
        """Raise ModeRangeError unless every index lies in the comb range."""
        missing = [n for n in indices if not self.contains(n)]
        if missing:
            raise ModeRangeError(
                f"indices {missing} outside comb range [{self.n_min}, {self.n_max}]",
            )

    def frequency(self, n: int) -> float:
        """Absolute frequency of mode n in Hz."""
        return self.omega0 + n * self.delta_omega

    def modes(self) -> list[ModeLabel]:
        """All (n, z) and (n, y) labels in frequency order."""
        return [
            ModeLabel(n, pol)
            for n in self.indices
            for pol in (Polarization.Z, Polarization.Y)
        ]


@dataclass(frozen=True)
class PumpConfig:
    """Bimodal pump: indices p_z, p_y and squeezing parameters r_z, r_y."""

    p_z: int
    p_y: int
    r_z: float = 0.0
    r_y: float = 0.0

    def __post_init__(self) -> None:
        spacing = abs(self.p_y - self.p_z)
        if spacing < 2 or spacing % 2:
            raise PumpConfigError(
                f"|p_y - p_z| must be even and >= 2, got {spacing}",
            )
        if self.r_z < 0 or self.r_y < 0:
            raise PumpConfigError(
                "squeezing parameters must be nonnegative, "
                f"got ({self.r_z}, {self.r_y})",
            )

    @property
    def m(self) -> int:
        """Number of independent wires."""
        return abs(self.p_y - self.p_z) // 2

    def index(self, pump: Polarization) -> int:
        return self.p_z if pump is Polarization.Z else self.p_y

    def squeezing(self, pump: Polarization) -> float:
        return self.r_z if pump is Polarization.Z else self.r_y

    def is_phasematched(self, n_a: int, n_b: int) -> bool:
        return n_a + n_b in (self.p_z, self.p_y)

    def pump_for_pair(self, n_a: int, n_b: int) -> Polarization | None:
        if n_a + n_b == self.p_z:
            return Polarization.Z
        if n_a + n_b == self.p_y:
            return Polarization.Y
        return None

    @property
    def has_odd_pumps(self) -> bool:
        return self.p_z % 2 == 1

    @property
    def fourier_anchor(self) -> int:
        """First index of the Fourier-shifted parity class, ceil(p_z / 2)."""
        return -(-self.p_z // 2)

    def in_fourier_class(self, n: int) -> bool:
        return (n - self.fourier_anchor) % 2 == 0

    def swapped(self) -> "PumpConfig":
        return PumpConfig(p_z=self.p_y, p_y=self.p_z, r_z=self.r_y, r_y=self.r_z)


@dataclass(frozen=True)
class WireEdge:
    """Weighted edge of a dual-rail cluster graph."""

    a: ModeLabel
    b: ModeLabel
    weight: Fraction

    def as_row(self) -> list[object]:
        a, b = self.a, self.b
        return [a.n, a.pol.value, b.n, b.pol.value, str(self.weight)]


@dataclass(frozen=True)
class WireGraph:
    """One dual-rail cluster state over a frequency chain."""

    sequence: tuple[int, ...]
    nodes: tuple[ModeLabel, ...]
    edges: tuple[WireEdge, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        for edge in self.edges:
            if abs(edge.weight) != EDGE_WEIGHT:
                raise PumpConfigError(f"edge weight must be +-1/2, got {edge.weight}")

    def neighbors(self, mode: ModeLabel) -> dict[ModeLabel, Fraction]:
        result: dict[ModeLabel, Fraction] = {}
        for edge in self.edges:
            if edge.a == mode:
                result[edge.b] = edge.weight
            elif edge.b == mode:
                result[edge.a] = edge.weight
        return result

    def degree(self, mode: ModeLabel) -> int:
        return len(self.neighbors(mode))

    def adjacency(self) -> np.ndarray:
        """Adjacency matrix V over `nodes` in their stored order."""
        position = {mode: i for i, mode in enumerate(self.nodes)}
        matrix = np.zeros((len(self.nodes), len(self.nodes)))
        for edge in self.edges:
            i, j = position[edge.a], position[edge.b]
            matrix[i, j] = matrix[j, i] = float(edge.weight)
        return matrix

    def to_payload(self) -> dict[str, object]:
        return {
            "sequence": list(self.sequence),
            "edges": [edge.as_row() for edge in self.edges],
        }
