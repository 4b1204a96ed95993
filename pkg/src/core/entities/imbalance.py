# src/core/entities/imbalance.py
from dataclasses import dataclass, field

from infrastructure.error_handling.exceptions import PumpConfigError


@dataclass(frozen=True)
class ImbalanceSpec:
    """Unequal pump squeezing r_z = r + epsilon, r_y = r - epsilon."""

    r: float
    epsilon: float

    def __post_init__(self) -> None:
        if abs(self.epsilon) >= self.r:
            raise PumpConfigError(
                f"|epsilon| must be below r, got epsilon={self.epsilon}, r={self.r}",
            )

    @property
    def r_z(self) -> float:
        return self.r + self.epsilon

    @property
    def r_y(self) -> float:
        return self.r - self.epsilon


@dataclass(frozen=True)
class ImbalanceReport:
    """Exact and first-order nullifier figures for one imbalance."""

    epsilon: float
    first_order_variance: float
    exact_variance: float
    residual: float
    zy_correlation: float
    degradation: float
    edge_weights: dict[str, float] = field(default_factory=dict)

    HEADER = (
        "epsilon",
        "first_order_variance",
        "exact_variance",
        "residual",
        "zy_correlation",
        "degradation",
    )

    def as_row(self) -> list[float]:
        return [
            self.epsilon,
            self.first_order_variance,
            self.exact_variance,
            self.residual,
            self.zy_correlation,
            self.degradation,
        ]

    def to_payload(self) -> dict[str, object]:
        payload: dict[str, object] = dict(zip(self.HEADER, self.as_row(), strict=True))
        payload["edge_weights"] = dict(self.edge_weights)
        return payload
