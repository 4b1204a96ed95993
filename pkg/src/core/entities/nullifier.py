# src/core/entities/nullifier.py
from dataclasses import dataclass
from enum import Enum

from core.entities.comb import Polarization
from core.entities.gaussian_state import QuadratureCombination


class Quadrature(Enum):
    Q = "Q"
    P = "P"


class NullifierKind(Enum):
    """Observable families evaluated on the comb state."""

    EPR_Q = "EprQ"
    EPR_P = "EprP"
    BS_Q = "BsQ"
    BS_P = "BsP"
    GRAPH_Z = "GraphZ"
    GRAPH_Y = "GraphY"
    GENERALIZED = "GeneralizedA"
    WRONG_FREQUENCY = "WrongFrequency"


@dataclass(frozen=True)
class Nullifier:
    """A labelled observable together with the metadata of its table row."""

    kind: NullifierKind
    pump_center: Polarization
    n: int
    observable: QuadratureCombination
    theta: float | None = None
    truncated: bool = False
    wire: int | None = None


@dataclass(frozen=True)
class NullifierRow:
    """Evaluated nullifier: variance, its shot noise and the ratio in dB."""

    kind: NullifierKind
    pump_center: Polarization
    n: int
    theta: float | None
    variance: float
    shot_noise: float
    db: float
    truncated: bool = False
    wire: int | None = None

    @property
    def ratio(self) -> float:
        return self.variance / self.shot_noise

    HEADER = (
        "wire",
        "kind",
        "pump_center",
        "n",
        "theta",
        "variance",
        "shot_noise",
        "dB",
        "truncated",
    )

    def as_row(self) -> list[object]:
        return [
            "" if self.wire is None else self.wire,
            self.kind.value,
            self.pump_center.value,
            self.n,
            "" if self.theta is None else self.theta,
            self.variance,
            self.shot_noise,
            self.db,
            self.truncated,
        ]
