# src/core/entities/homodyne.py
from dataclasses import dataclass, field

from core.entities.comb import ModeLabel, Polarization
from infrastructure.error_handling.exceptions import PumpConfigError

DEFAULT_MODULATOR_BANDWIDTH = 14e9


@dataclass(frozen=True)
class BhdConfig:
    """
    Two-tone balanced homodyne settings.

    The LO sits at half the frequency of `lo_center_pump` shifted by `lo_offset`
    comb spacings; its sidebands sit at +-(sideband_n + 1/2) spacings.
    """

    lo_center_pump: Polarization = Polarization.Y
    lo_offset: float = 0.0
    sideband_n: int = 0
    theta_lo: float = 0.0
    theta_o: float = 0.0
    dark_to_shot: float = 0.0
    modulator_bandwidth: float = DEFAULT_MODULATOR_BANDWIDTH

    def __post_init__(self) -> None:
        if self.sideband_n < 0:
            raise PumpConfigError(f"sideband_n must be >= 0, got {self.sideband_n}")
        if self.dark_to_shot < 0:
            raise PumpConfigError(
                f"dark_to_shot must be >= 0, got {self.dark_to_shot}",
            )
        if self.modulator_bandwidth <= 0:
            raise PumpConfigError("modulator_bandwidth must be positive")

    @property
    def pump_center_sign(self) -> int:
        return 1 if self.lo_center_pump is Polarization.Z else -1


@dataclass(frozen=True)
class SidebandSelection:
    """Comb modes hit by the upper and lower LO sidebands, None between modes."""

    upper: int | None
    lower: int | None
    phasematched: bool = False

    @property
    def empty(self) -> bool:
        return self.upper is None and self.lower is None

    def modes(self) -> list[tuple[ModeLabel, ModeLabel]]:
        """(z, y) rail labels at each selected frequency."""
        return [
            (ModeLabel(n, Polarization.Z), ModeLabel(n, Polarization.Y))
            for n in (self.upper, self.lower)
            if n is not None
        ]


@dataclass(frozen=True)
class ScanPoint:
    theta_lo: float
    variance_db_raw: float
    variance_db_corrected: float

    def as_row(self) -> list[float]:
        return [self.theta_lo, self.variance_db_raw, self.variance_db_corrected]


@dataclass(frozen=True)
class ScanTrace:
    """Phase scan of the measured observable over the LO phase."""

    config: BhdConfig
    selection: SidebandSelection
    observable: str
    points: tuple[ScanPoint, ...] = field(default_factory=tuple)
    floor_db: float = 0.0

    HEADER = ("theta_lo_rad", "variance_db_raw", "variance_db_corrected")

    @property
    def minimum_db(self) -> float:
        return min(point.variance_db_corrected for point in self.points)

    @property
    def maximum_db(self) -> float:
        return max(point.variance_db_corrected for point in self.points)
