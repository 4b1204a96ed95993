# src/services/nullifier/observables.py
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
from core.entities.nullifier import Nullifier, NullifierKind, NullifierRow, Quadrature
from infrastructure.error_handling.exceptions import (
    DuplicateModeError,
    ModeRangeError,
    PhasematchError,
)
from services.gaussian.engine import GaussianEngine, ratio_to_db, shot_noise

logger = logging.getLogger(__name__)

Z = Polarization.Z
Y = Polarization.Y
HALF = 0.5
BS_KINDS = (
    (Quadrature.Q, NullifierKind.BS_Q),
    (Quadrature.P, NullifierKind.BS_P),
)


def rail_sign(center: Polarization) -> int:
    """Relative sign of the y rail in a pair template centered on `center`."""
    return 1 if center is Z else -1


def pair_template(
    center: Polarization,
    a: int,
    b: int,
    quad: Quadrature | None = None,
    theta: float | None = None,
    label: str = "",
) -> QuadratureCombination:
    """
    Four-term beam-splitter-basis combination over frequencies a and b.

    Q form: +1 at a and -1 at b. P form: +1 at both. theta form: +1 at a with
    angle theta and -1 at b with angle -theta. The y rail carries the extra
    sign of `center`.
    """
    if a == b:
        raise DuplicateModeError(f"pair template needs two frequencies, got {a} twice")
    sign = rail_sign(center)
    if quad is Quadrature.Q:
        angle_a, angle_b, coeff_b = Q_ANGLE, Q_ANGLE, -1.0
    elif quad is Quadrature.P:
        angle_a, angle_b, coeff_b = P_ANGLE, P_ANGLE, 1.0
    else:
        angle = 0.0 if theta is None else theta
        angle_a, angle_b, coeff_b = angle, -angle, -1.0
    return QuadratureCombination.of(
        [
            (ModeLabel(a, Z), angle_a, 1.0),
            (ModeLabel(a, Y), angle_a, float(sign)),
            (ModeLabel(b, Z), angle_b, coeff_b),
            (ModeLabel(b, Y), angle_b, coeff_b * sign),
        ],
        label,
    )


def epr_nullifier(
    pumps: PumpConfig,
    comb: CombSpec,
    pump: Polarization,
    n: int,
    quad: Quadrature,
) -> QuadratureCombination:
    """
    EPR nullifier Q_n - Q_{p-n} or P_n + P_{p-n} before the beam splitter.

    Raises:
        ModeRangeError: If the pair leaves the comb
    """
    partner = pumps.index(pump) - n
    comb.require(n, partner)
    if partner == n:
        raise DuplicateModeError(f"mode {n} is its own partner")
    angle, coeff = (Q_ANGLE, -1.0) if quad is Quadrature.Q else (P_ANGLE, 1.0)
    return QuadratureCombination.of(
        [(ModeLabel(n, pump), angle, 1.0), (ModeLabel(partner, pump), angle, coeff)],
        f"Epr{quad.value}[{pump.value}](n={n})",
    )


def bs_nullifier(
    pumps: PumpConfig,
    comb: CombSpec,
    pump: Polarization,
    n: int,
    quad: Quadrature | None = None,
    theta: float | None = None,
) -> QuadratureCombination:
    """
    Nullifier of one EPR pair seen through the polarization beam splitter.

    Args:
        pumps: Pump configuration
        comb: Simulated comb slice
        pump: Pump the pair belongs to
        n: Frequency index of the pair (n, p - n)
        quad: Q or P form, or None for the generalized form at `theta`
        theta: Generalized-quadrature angle

    Raises:
        ModeRangeError: If the pair leaves the comb
    """
    partner = pumps.index(pump) - n
    comb.require(n, partner)
    if quad is None:
        label = f"A[{pump.value}](n={n},theta={theta})"
        return pair_template(pump, n, partner, theta=theta, label=label)
    a, b = (n, partner) if pump is Z else (partner, n)
    label = f"Bs{quad.value}[{pump.value}](n={n})"
    return pair_template(pump, a, b, quad=quad, label=label)


def graph_neighbors(
    pumps: PumpConfig,
    rail: Polarization,
    n: int,
) -> list[tuple[ModeLabel, float]]:
    """Adjacency weights of node (n, rail): all +1/2 across the z pump,
    +1/2 to the same rail and -1/2 to the other rail across the y pump."""
    z_partner, y_partner = pumps.p_z - n, pumps.p_y - n
    return [
        (ModeLabel(z_partner, Y), HALF),
        (ModeLabel(z_partner, Z), HALF),
        (ModeLabel(y_partner, Z), HALF if rail is Z else -HALF),
        (ModeLabel(y_partner, Y), -HALF if rail is Z else HALF),
    ]


def graph_nullifier(
    pumps: PumpConfig,
    comb: CombSpec,
    rail: Polarization,
    n: int,
    allow_truncated: bool = False,
) -> QuadratureCombination:
    """
    Canonical graph nullifier P_(n,rail) - sum_k V_k Q_k.

    Valid on the Fourier-shifted state. With `allow_truncated`, neighbors
    outside the comb are dropped instead of rejected.

    Raises:
        ModeRangeError: If a neighbor leaves the comb
    """
    comb.require(n)
    neighbors = graph_neighbors(pumps, rail, n)
    if not allow_truncated:
        comb.require(*(mode.n for mode, _ in neighbors))
    terms = [(ModeLabel(n, rail), P_ANGLE, 1.0)]
    terms.extend(
        (mode, Q_ANGLE, -weight) for mode, weight in neighbors if comb.contains(mode.n)
    )
    return QuadratureCombination.of(terms, f"Graph{rail.value.upper()}(n={n})")


def graph_nullifier_from_bs(
    pumps: PumpConfig,
    comb: CombSpec,
    rail: Polarization,
    n: int,
) -> QuadratureCombination:
    """
    Graph nullifier rebuilt from the two beam-splitter nullifiers at node n.

    Valid on the unshifted state. Fourier-class nodes combine the Q forms,
    the other parity combines the P forms.
    """
    comb.require(n, pumps.p_z - n, pumps.p_y - n)
    quad = Quadrature.Q if pumps.in_fourier_class(n) else Quadrature.P
    z_form = bs_nullifier(pumps, comb, Z, n, quad)
    y_form = bs_nullifier(pumps, comb, Y, n, quad)
    if quad is Quadrature.Q:
        y_weight = -HALF if rail is Z else HALF
    else:
        y_weight = HALF if rail is Z else -HALF
    label = f"GraphFromBs{rail.value.upper()}(n={n})"
    return z_form.combine(y_form, HALF, y_weight, label)


def wrong_frequency_combination(
    pumps: PumpConfig,
    comb: CombSpec,
    n_i: int,
    n_ii: int,
    center: Polarization,
    theta: float = 0.0,
) -> QuadratureCombination:
    """
    Pair template over two frequencies that no pump connects.

    Raises:
        PhasematchError: If n_i + n_ii matches a pump index
        ModeRangeError: If a frequency leaves the comb
    """
    if pumps.is_phasematched(n_i, n_ii):
        raise PhasematchError(
            f"modes {n_i} and {n_ii} are phasematched by a pump; use bs_nullifier",
        )
    comb.require(n_i, n_ii)
    return pair_template(
        center,
        n_i,
        n_ii,
        theta=theta,
        label=f"WrongFrequency[{center.value}]({n_i},{n_ii},theta={theta})",
    )


def wrong_frequency_ratio(
    pumps: PumpConfig,
    comb: CombSpec,
    n_i: int,
    n_ii: int,
    center: Polarization,
) -> float:
    """Closed-form ratio: cosh 2r per squeezed arm, 1 for an unpaired arm."""
    r = pumps.squeezing(center)
    p = pumps.index(center)
    arms = [comb.contains(p - k) and p - k != k for k in (n_i, n_ii)]
    return sum(math.cosh(2 * r) if paired else 1.0 for paired in arms) / 2


def wire_pairs(
    sequence: Sequence[int],
    pumps: PumpConfig,
) -> list[tuple[Polarization, int, int]]:
    """Consecutive (pump, a, b) links along a wire."""
    links = []
    for a, b in zip(sequence, sequence[1:], strict=False):
        pump = pumps.pump_for_pair(a, b)
        if pump is not None:
            links.append((pump, a, b))
    return links


def wire_nullifiers(
    pumps: PumpConfig,
    comb: CombSpec,
    wires: Sequence[Sequence[int]],
    thetas: Sequence[float] = (),
) -> list[Nullifier]:
    """Every beam-splitter nullifier of both centerings along the wires."""
    nullifiers = []
    for w, sequence in enumerate(wires):
        for pump, a, _ in wire_pairs(sequence, pumps):
            for quad, kind in BS_KINDS:
                obs = bs_nullifier(pumps, comb, pump, a, quad)
                nullifiers.append(Nullifier(kind, pump, a, obs, wire=w))
            for theta in thetas:
                obs = bs_nullifier(pumps, comb, pump, a, theta=theta)
                nullifiers.append(
                    Nullifier(
                        NullifierKind.GENERALIZED,
                        pump,
                        a,
                        obs,
                        theta=theta,
                        wire=w,
                    ),
                )
    return nullifiers


def wire_graph_nullifiers(
    pumps: PumpConfig,
    comb: CombSpec,
    wires: Sequence[Sequence[int]],
) -> list[Nullifier]:
    """Graph nullifiers of both rails at every node, truncated ones flagged."""
    nullifiers = []
    for w, sequence in enumerate(wires):
        for n in sequence:
            complete = comb.contains(pumps.p_z - n) and comb.contains(pumps.p_y - n)
            for rail, kind in ((Z, NullifierKind.GRAPH_Z), (Y, NullifierKind.GRAPH_Y)):
                obs = graph_nullifier(pumps, comb, rail, n, allow_truncated=True)
                nullifiers.append(
                    Nullifier(kind, rail, n, obs, truncated=not complete, wire=w),
                )
    return nullifiers


def evaluate(
    engine: GaussianEngine,
    state: GaussianState,
    nullifiers: Sequence[Nullifier],
) -> list[NullifierRow]:
    """Batched variances, shot noise and dB for a list of nullifiers."""
    variances = engine.variances(state, [null.observable for null in nullifiers])
    rows = []
    for null, variance in zip(nullifiers, variances, strict=True):
        noise = shot_noise(null.observable, state.vac_var)
        rows.append(
            NullifierRow(
                kind=null.kind,
                pump_center=null.pump_center,
                n=null.n,
                theta=null.theta,
                variance=float(variance),
                shot_noise=noise,
                db=ratio_to_db(float(variance) / noise),
                truncated=null.truncated,
                wire=null.wire,
            ),
        )
    return rows


def uniformity_spread(rows: Sequence[NullifierRow]) -> dict[str, float]:
    """Max minus min dB per kind and centering over untruncated rows."""
    groups: dict[str, list[float]] = {}
    for row in rows:
        if not row.truncated:
            key = f"{row.kind.value}[{row.pump_center.value}]"
            groups.setdefault(key, []).append(row.db)
    return {key: float(np.ptp(values)) for key, values in sorted(groups.items())}
