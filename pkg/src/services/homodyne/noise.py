# src/services/homodyne/noise.py
import logging

from infrastructure.error_handling.exceptions import UnphysicalCorrectionError

logger = logging.getLogger(__name__)


def db_to_ratio(db: float) -> float:
    return 10.0 ** (db / 10.0)


def contaminate(eta_act: float, dark_to_shot: float) -> float:
    """
    Squeezing ratio seen with additive electronic noise.

    Args:
        eta_act: Actual variance ratio to shot noise
        dark_to_shot: Electronic-noise to shot-noise variance ratio

    Returns:
        (eta_act + d) / (1 + d)

    Raises:
        UnphysicalCorrectionError: If eta_act <= 0 or dark_to_shot < 0
    """
    if eta_act <= 0 or dark_to_shot < 0:
        raise UnphysicalCorrectionError(
            f"need eta_act > 0 and dark_to_shot >= 0, got {eta_act}, {dark_to_shot}",
        )
    return (eta_act + dark_to_shot) / (1.0 + dark_to_shot)


def correct_electronic_noise(eta_exp: float, dark_to_shot: float) -> float:
    """
    Remove electronic noise from a measured squeezing ratio.

    Args:
        eta_exp: Measured variance ratio to shot noise
        dark_to_shot: Electronic-noise to shot-noise variance ratio

    Returns:
        (eta_exp - 1) d + eta_exp

    Raises:
        UnphysicalCorrectionError: If the input or the corrected ratio is <= 0
    """
    if eta_exp <= 0 or dark_to_shot < 0:
        raise UnphysicalCorrectionError(
            f"need eta_exp > 0 and dark_to_shot >= 0, got {eta_exp}, {dark_to_shot}",
        )
    eta_act = (eta_exp - 1.0) * dark_to_shot + eta_exp
    if eta_act <= 0:
        logger.warning(
            "Corrected ratio is unphysical",
            extra={"eta_exp": eta_exp, "dark_to_shot": dark_to_shot},
        )
        raise UnphysicalCorrectionError(
            f"corrected ratio {eta_act} <= 0 for eta_exp={eta_exp}, d={dark_to_shot}",
        )
    return eta_act
