# src/services/entanglement/vlf.py
"""
Separability bounds for four-mode unit cells and whole wires.

Bounds are stated for a single-quadrature vacuum variance of 1/4; measured
variances are rescaled from the engine's vacuum variance before comparison.
"""

import logging
import math
from collections.abc import Mapping, Sequence

import numpy as np

from core.entities.comb import CombSpec, ModeLabel, Polarization, PumpConfig
from core.entities.entanglement import (
    Bipartition,
    BipartitionResult,
    CellReport,
    ExcludedCell,
    VlfReport,
)
from core.entities.gaussian_state import GaussianState, QuadratureCombination
from core.entities.nullifier import Quadrature
from infrastructure.error_handling.exceptions import ModeRangeError
from services.comb.mode_arithmetic import wire_index
from services.gaussian.engine import GaussianEngine
from services.nullifier.observables import (
    evaluate,
    pair_template,
    wire_nullifiers,
    wire_pairs,
)

logger = logging.getLogger(__name__)

VLF_VACUUM = 0.25
SUFFICIENT_RATIO = 0.5

Cell = tuple[ModeLabel, ModeLabel, ModeLabel, ModeLabel]


def unit_cell(n3: int, n4: int) -> Cell:
    z, y = Polarization.Z, Polarization.Y
    return (ModeLabel(n3, z), ModeLabel(n4, z), ModeLabel(n3, y), ModeLabel(n4, y))


def cell_bipartitions(cell: Cell) -> list[Bipartition]:
    """The seven splits: four singletons, frequency, rail, then crossed rails."""
    n3z, n4z, n3y, n4y = cell
    sides = [{n3z}, {n4z}, {n3y}, {n4y}, {n3z, n3y}, {n3z, n4z}, {n3z, n4y}]
    return [Bipartition(cell, frozenset(side)) for side in sides]


def restrict(
    obs: QuadratureCombination,
    cell: Cell,
    quad: Quadrature,
) -> dict[ModeLabel, float]:
    """Q or P coefficients of `obs` on the cell modes, zero where absent."""
    weights = obs.weights()
    slot = 0 if quad is Quadrature.Q else 1
    return {mode: weights.get(mode, (0.0, 0.0))[slot] for mode in cell}


def vlf_bound(
    h: Mapping[ModeLabel, float],
    g: Mapping[ModeLabel, float],
    partition: Bipartition,
) -> float:
    """
    Lower bound 1/2 (|sum_A h_j g_j| + |sum_B h_j g_j|) on Var(u) + Var(v).

    Args:
        h: Q coefficients of u over the cell
        g: P coefficients of v over the cell
        partition: Split of the cell

    Raises:
        ModeRangeError: If h, g and the cell do not index the same modes
    """
    cell = set(partition.cell)
    if set(h) != cell or set(g) != cell:
        raise ModeRangeError("h and g must index exactly the cell modes")
    side_a = sum(h[mode] * g[mode] for mode in partition.side_a)
    side_b = sum(h[mode] * g[mode] for mode in partition.side_b)
    return 0.5 * (abs(side_a) + abs(side_b))


def companion_pair(
    pumps: PumpConfig,
    comb: CombSpec,
    center: Polarization,
    n3: int,
    n4: int,
) -> tuple[int, int, bool]:
    """
    Pair of the other pump used for the rail-mixing bipartitions.

    Returns (n3, n5) when n5 = p_other - n3 is usable, else (n4, p_other - n4)
    flagged as boundary.

    Raises:
        ModeRangeError: If neither pairing fits in the comb
    """
    p_other = pumps.index(center.other)
    for anchor, boundary in ((n3, False), (n4, True)):
        partner = p_other - anchor
        if comb.contains(partner) and partner != anchor:
            return anchor, partner, boundary
    raise ModeRangeError(f"no companion pair for cell ({n3}, {n4}) in the comb")


def check_unit_cell(
    engine: GaussianEngine,
    state: GaussianState,
    pumps: PumpConfig,
    comb: CombSpec,
    center: Polarization,
    n3: int,
    n4: int,
) -> CellReport:
    """
    Evaluate all seven bipartition inequalities of the cell {n3, n4}.

    Raises:
        ModeRangeError: If the cell or its companion pair leaves the comb
    """
    comb.require(n3, n4)
    if n3 + n4 != pumps.index(center):
        raise ModeRangeError(f"cell ({n3}, {n4}) is not a {center.value}-pump pair")
    cell = unit_cell(n3, n4)
    anchor, partner, boundary = companion_pair(pumps, comb, center, n3, n4)

    pair = f"[{center.value}]({n3},{n4})"
    q_obs = pair_template(center, n3, n4, Quadrature.Q, label=f"Q{pair}")
    p_obs = pair_template(center, n3, n4, Quadrature.P, label=f"P{pair}")
    mixed = pair_template(
        center.other,
        anchor,
        partner,
        Quadrature.P,
        label=f"P[{center.other.value}]({anchor},{partner})",
    )
    scale = VLF_VACUUM / state.vac_var
    var_q, var_p, var_mixed = scale * engine.variances(state, [q_obs, p_obs, mixed])

    h = restrict(q_obs, cell, Quadrature.Q)
    g_own = restrict(p_obs, cell, Quadrature.P)
    g_mixed = restrict(mixed, cell, Quadrature.P)

    results = []
    for i, partition in enumerate(cell_bipartitions(cell)):
        if i < 5:
            g, partner_obs, var_v = g_own, p_obs, var_p
        else:
            g, partner_obs, var_v = g_mixed, mixed, var_mixed
        total = float(var_q + var_v)
        bound = vlf_bound(h, g, partition)
        results.append(
            BipartitionResult(
                bipartition=partition,
                observables=(q_obs.label, partner_obs.label),
                variance_sum=total,
                bound=bound,
                violated=total < bound,
            ),
        )
    if boundary:
        logger.warning(
            "Cell uses the fallback companion pair",
            extra={"center": center.value, "n3": n3, "n4": n4},
        )
    return CellReport(
        center=center,
        n3=n3,
        n4=n4,
        companion=(anchor, partner),
        boundary=boundary,
        results=tuple(results),
    )


def sufficient_condition(
    engine: GaussianEngine,
    state: GaussianState,
    pumps: PumpConfig,
    comb: CombSpec,
    wire: Sequence[int],
) -> bool:
    """Every beam-splitter nullifier of the wire below half its shot noise."""
    rows = evaluate(engine, state, wire_nullifiers(pumps, comb, [wire]))
    return bool(rows) and all(row.ratio < SUFFICIENT_RATIO for row in rows)


def full_wire_inseparability(
    engine: GaussianEngine,
    state: GaussianState,
    pumps: PumpConfig,
    comb: CombSpec,
    wire: Sequence[int],
    wire_number: int = 0,
) -> VlfReport:
    """
    Check every z- and y-centered cell along a wire.

    The wire is inseparable when at least two cells are evaluated and all of
    them violate every bound; cells without a companion pair are excluded.
    """
    cells = []
    excluded = []
    for center, n3, n4 in wire_pairs(wire, pumps):
        try:
            cells.append(check_unit_cell(engine, state, pumps, comb, center, n3, n4))
        except ModeRangeError as e:
            logger.warning(
                "Excluding truncated cell",
                extra={"center": center.value, "n3": n3, "n4": n4, "reason": str(e)},
            )
            excluded.append(ExcludedCell(center, n3, n4, str(e)))
    report = VlfReport(
        wire=wire_number,
        sequence=tuple(wire),
        cells=tuple(cells),
        excluded=tuple(excluded),
        sufficient=sufficient_condition(engine, state, pumps, comb, wire),
    )
    logger.info(
        "Checked wire inseparability",
        extra={
            "wire": wire_number,
            "cells": len(cells),
            "excluded": len(excluded),
            "inseparable": report.inseparable,
        },
    )
    return report


def cross_wire_independence(
    engine: GaussianEngine,
    state: GaussianState,
    pumps: PumpConfig,
    comb: CombSpec,
) -> float:
    """Largest |cov| entry between quadratures of modes on different wires."""
    wires = wire_index(pumps, comb)
    per_mode = np.array([wires[mode.n] for mode in state.modes])
    per_quadrature = np.concatenate([per_mode, per_mode])
    rows, cols, values = engine.backend_of(state).nonzero_entries(state.cov)
    crossing = per_quadrature[rows] != per_quadrature[cols]
    if not np.any(crossing):
        return 0.0
    return float(np.max(np.abs(values[crossing])))


def closed_form_sum(r: float) -> float:
    """Variance sum of a nullifier pair in the rescaled units, 2 e^-2r."""
    return 2.0 * math.exp(-2.0 * r)
