# src/services/imperfect/imbalance.py
"""Unequal pump squeezing around the unit cell of modes -1, 0 and 1."""

import logging
import math
from collections.abc import Sequence

import numpy as np

from core.entities.comb import CombSpec, ModeLabel, Polarization, PumpConfig
from core.entities.gaussian_state import (
    P_ANGLE,
    Q_ANGLE,
    GaussianState,
    QuadratureCombination,
)
from core.entities.imbalance import ImbalanceReport, ImbalanceSpec
from infrastructure.error_handling.exceptions import PumpConfigError
from services.gaussian.engine import GaussianEngine, shot_noise
from services.nullifier.observables import graph_nullifier

logger = logging.getLogger(__name__)

Z = Polarization.Z
Y = Polarization.Y
CANONICAL_PUMPS = (1, -1)


def canonical_pumps(spec: ImbalanceSpec) -> PumpConfig:
    return PumpConfig(p_z=1, p_y=-1, r_z=spec.r_z, r_y=spec.r_y)


def _require_canonical(pumps: PumpConfig, comb: CombSpec) -> None:
    if (pumps.p_z, pumps.p_y) != CANONICAL_PUMPS:
        raise PumpConfigError(
            "first-order nullifiers need p_z=1, p_y=-1, "
            f"got ({pumps.p_z}, {pumps.p_y})",
        )
    comb.require(-1, 0, 1)


def first_order_nullifier(
    rail: Polarization,
    spec: ImbalanceSpec,
    comb: CombSpec,
    pumps: PumpConfig | None = None,
) -> QuadratureCombination:
    """
    Graph nullifier of node (0, rail) to first order in epsilon.

    Raises:
        PumpConfigError: If the pumps are not p_z=1, p_y=-1
        ModeRangeError: If modes -1, 0, 1 are not all in the comb
    """
    _require_canonical(pumps or canonical_pumps(spec), comb)
    eps = spec.epsilon
    near, far = 0.5 * (1 - eps), 0.5 * (1 + eps)
    y_sign = 1.0 if rail is Z else -1.0
    return QuadratureCombination.of(
        [
            (ModeLabel(0, rail), P_ANGLE, 1.0),
            (ModeLabel(0, rail.other), P_ANGLE, -eps),
            (ModeLabel(1, Y), Q_ANGLE, -near),
            (ModeLabel(1, Z), Q_ANGLE, -near),
            (ModeLabel(-1, Z), Q_ANGLE, -y_sign * far),
            (ModeLabel(-1, Y), Q_ANGLE, y_sign * far),
        ],
        f"FirstOrder{rail.value.upper()}(eps={eps})",
    )


def first_order_edge_weights(
    rail: Polarization,
    spec: ImbalanceSpec,
    comb: CombSpec,
) -> dict[str, float]:
    """Effective adjacency of node (0, rail), including the spurious 0z-0y edge."""
    weights = {}
    for term in first_order_nullifier(rail, spec, comb).terms:
        if term.mode == ModeLabel(0, rail):
            continue
        weights[str(term.mode)] = -term.coefficient
    return weights


def exact_ratio(spec: ImbalanceSpec) -> float:
    """Closed-form variance ratio of the first-order nullifier on the exact state."""
    eps = spec.epsilon
    g = (1 - eps) ** 2 * math.exp(-2 * eps) + (1 + eps) ** 2 * math.exp(2 * eps)
    return math.exp(-2 * spec.r) * g / (2 * (1 + eps**2))


def covariance(
    engine: GaussianEngine,
    state: GaussianState,
    a: QuadratureCombination,
    b: QuadratureCombination,
) -> float:
    var_a, var_b, var_sum = engine.variances(state, [a, b, a.combine(b, 1.0, 1.0)])
    return float(0.5 * (var_sum - var_a - var_b))


def imbalance_report(
    engine: GaussianEngine,
    spec: ImbalanceSpec,
    comb: CombSpec,
    backend: str = "auto",
) -> ImbalanceReport:
    """
    Compare the exact imbalanced state with the first-order description.

    first_order_variance is the balanced prediction e^-2r; exact_variance is the
    first-order nullifier's ratio on the exact state; degradation is the excess
    ratio of the balanced graph nullifier.
    """
    pumps = canonical_pumps(spec)
    _require_canonical(pumps, comb)
    state = engine.build_graph_state(pumps, comb, backend)
    nullifier = first_order_nullifier(Z, spec, comb, pumps)
    balanced = graph_nullifier(pumps, comb, Z, 0)
    var_first, var_balanced = engine.variances(state, [nullifier, balanced])
    exact = float(var_first) / shot_noise(nullifier, state.vac_var)
    balanced_ratio = float(var_balanced) / shot_noise(balanced, state.vac_var)
    prediction = math.exp(-2 * spec.r)
    zy = covariance(
        engine,
        state,
        QuadratureCombination.of([(ModeLabel(0, Z), Q_ANGLE, 1.0)]),
        QuadratureCombination.of([(ModeLabel(0, Y), Q_ANGLE, 1.0)]),
    )
    report = ImbalanceReport(
        epsilon=spec.epsilon,
        first_order_variance=prediction,
        exact_variance=exact,
        residual=exact - prediction,
        zy_correlation=zy,
        degradation=balanced_ratio - prediction,
        edge_weights=first_order_edge_weights(Z, spec, comb),
    )
    logger.debug(
        "Imbalance evaluated",
        extra={"epsilon": spec.epsilon, "residual": report.residual},
    )
    return report


def imbalance_sweep(
    engine: GaussianEngine,
    r: float,
    epsilons: Sequence[float],
    comb: CombSpec,
    backend: str = "auto",
) -> list[ImbalanceReport]:
    return [
        imbalance_report(engine, ImbalanceSpec(r, eps), comb, backend)
        for eps in epsilons
    ]


def loglog_slope(epsilons: Sequence[float], values: Sequence[float]) -> float:
    """Least-squares slope of log|value| against log|epsilon|."""
    x = np.log(np.abs(np.asarray(epsilons, dtype=float)))
    y = np.log(np.abs(np.asarray(values, dtype=float)))
    return float(np.polyfit(x, y, 1)[0])
