# src/services/homodyne/detection.py
import logging
import math
from collections.abc import Sequence

import numpy as np
from scipy import constants

from core.entities.comb import CombSpec, ModeLabel, Polarization, PumpConfig
from core.entities.gaussian_state import GaussianState, QuadratureCombination
from core.entities.homodyne import BhdConfig, ScanPoint, ScanTrace, SidebandSelection
from infrastructure.error_handling.exceptions import (
    EmptySelectionError,
    PumpConfigError,
)
from services.gaussian.engine import GaussianEngine, ratio_to_db, shot_noise
from services.homodyne.noise import contaminate
from services.nullifier.observables import rail_sign

logger = logging.getLogger(__name__)

CABLE_VELOCITY_FACTOR = 2.0 / 3.0


def sideband_frequency(cfg: BhdConfig, comb: CombSpec) -> float:
    """Sideband offset (n + 1/2) delta_omega in Hz."""
    return (cfg.sideband_n + 0.5) * comb.delta_omega


def check_bandwidth(cfg: BhdConfig, comb: CombSpec) -> None:
    """
    Raises:
        PumpConfigError: If the sideband lies beyond the modulator bandwidth
    """
    omega = sideband_frequency(cfg, comb)
    if omega > cfg.modulator_bandwidth:
        raise PumpConfigError(
            f"sideband {cfg.sideband_n} at {omega:.6g} Hz exceeds the "
            f"{cfg.modulator_bandwidth:.6g} Hz modulator bandwidth",
        )


def _comb_index(doubled: float, comb: CombSpec) -> int | None:
    nearest = round(doubled)
    if abs(doubled - nearest) > 1e-9 or nearest % 2:
        return None
    n = nearest // 2
    return n if comb.contains(n) else None


def selected_modes(
    cfg: BhdConfig,
    pumps: PumpConfig,
    comb: CombSpec,
) -> SidebandSelection:
    """
    Comb indices hit by the two LO sidebands.

    The LO sits at (p / 2 + lo_offset) spacings; sidebands falling between comb
    modes or outside the comb select nothing.
    """
    check_bandwidth(cfg, comb)
    p = pumps.index(cfg.lo_center_pump)
    center_doubled = p + 2 * cfg.lo_offset
    upper = _comb_index(center_doubled + 2 * cfg.sideband_n + 1, comb)
    lower = _comb_index(center_doubled - 2 * cfg.sideband_n - 1, comb)
    phasematched = (
        upper is not None and lower is not None and pumps.is_phasematched(upper, lower)
    )
    selection = SidebandSelection(upper=upper, lower=lower, phasematched=phasematched)
    logger.debug(
        "Selected sidebands",
        extra={"upper": upper, "lower": lower, "phasematched": phasematched},
    )
    return selection


def _template(
    selection: SidebandSelection,
    center: Polarization,
    theta_o: float,
) -> QuadratureCombination:
    sign = rail_sign(center)
    terms = []
    if selection.upper is not None:
        terms += [
            (ModeLabel(selection.upper, Polarization.Z), theta_o, 1.0),
            (ModeLabel(selection.upper, Polarization.Y), theta_o, float(sign)),
        ]
    if selection.lower is not None:
        terms += [
            (ModeLabel(selection.lower, Polarization.Z), -theta_o, -1.0),
            (ModeLabel(selection.lower, Polarization.Y), -theta_o, -float(sign)),
        ]
    modes = f"{selection.upper},{selection.lower}"
    label = f"BHD[{center.value}]({modes},theta_o={theta_o})"
    return QuadratureCombination.of(terms, label)


def measured_observable(
    cfg: BhdConfig,
    pumps: PumpConfig,
    comb: CombSpec,
) -> QuadratureCombination:
    """
    Joint quadrature measured by the two-tone homodyne.

    The EOM phase theta_o sets the generalized-quadrature angle (+theta_o on the
    upper sideband, -theta_o on the lower); theta_lo rotates all terms together.

    Raises:
        EmptySelectionError: If neither sideband hits a comb mode
    """
    selection = selected_modes(cfg, pumps, comb)
    if selection.empty:
        raise EmptySelectionError("LO sidebands fall between comb modes")
    return _template(selection, cfg.lo_center_pump, cfg.theta_o).rotated(cfg.theta_lo)


def theta_grid(points: int) -> np.ndarray:
    """`points` LO phases evenly covering [0, 2 pi)."""
    return np.linspace(0.0, 2.0 * math.pi, points, endpoint=False)


def scan_floor(
    engine: GaussianEngine,
    state: GaussianState,
    obs: QuadratureCombination,
) -> float:
    """
    Lowest ratio reachable by rotating `obs` over the LO phase.

    Var(theta) is the quadratic form of (cos theta, sin theta) with the 2x2
    matrix of obs and its pi/2 rotation.
    """
    turned = obs.rotated(math.pi / 2)
    both = obs.combine(turned, 1.0, 1.0)
    var_u, var_w, var_sum = engine.variances(state, [obs, turned, both])
    cross = 0.5 * (var_sum - var_u - var_w)
    gram = np.array([[var_u, cross], [cross, var_w]])
    return float(np.linalg.eigvalsh(gram)[0]) / shot_noise(obs, state.vac_var)


def phase_scan(
    engine: GaussianEngine,
    state: GaussianState,
    cfg: BhdConfig,
    pumps: PumpConfig,
    comb: CombSpec,
    theta_lo_grid: Sequence[float],
) -> ScanTrace:
    """
    Squeezing trace over the LO phase, with and without electronic noise.

    The corrected column is the state's own ratio; the raw column adds the
    configured dark noise. A selection between comb modes gives a flat 0 dB.
    """
    if len(theta_lo_grid) == 0:
        raise PumpConfigError("phase scan needs at least one LO phase")
    selection = selected_modes(cfg, pumps, comb)
    if selection.empty:
        points = tuple(ScanPoint(float(theta), 0.0, 0.0) for theta in theta_lo_grid)
        return ScanTrace(cfg, selection, "shot noise", points, 0.0)

    base = _template(selection, cfg.lo_center_pump, cfg.theta_o)
    noise = shot_noise(base, state.vac_var)
    rotated = [base.rotated(float(theta)) for theta in theta_lo_grid]
    ratios = engine.variances(state, rotated) / noise
    points = tuple(
        ScanPoint(
            theta_lo=float(theta),
            variance_db_raw=ratio_to_db(contaminate(float(ratio), cfg.dark_to_shot)),
            variance_db_corrected=ratio_to_db(float(ratio)),
        )
        for theta, ratio in zip(theta_lo_grid, ratios, strict=True)
    )
    floor = ratio_to_db(scan_floor(engine, state, base))
    logger.info(
        "Scanned LO phase",
        extra={
            "points": len(points),
            "floor_db": floor,
            "phasematched": selection.phasematched,
        },
    )
    return ScanTrace(cfg, selection, base.label, points, floor)


def cable_phase_shift(
    length_m: float,
    n: int,
    delta_omega: float,
    velocity_factor: float = CABLE_VELOCITY_FACTOR,
) -> float:
    """EOM drive phase picked up in a coax cable at sideband (n + 1/2) delta_omega."""
    omega = 2 * math.pi * (n + 0.5) * delta_omega
    return omega * length_m / (velocity_factor * constants.c)
