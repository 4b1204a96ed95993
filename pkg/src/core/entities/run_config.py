# src/core/entities/run_config.py
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from core.entities.comb import CombSpec, PumpConfig
from core.entities.homodyne import BhdConfig
from infrastructure.settings import EngineSettings, get_settings

# r = 0.16 ln 10 gives exactly -3.2 dB of two-mode squeezing.
DEFAULT_R = 0.16 * math.log(10)
DEFAULT_DARK_DB = -13.0


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class OutputConfig:
    directory: Path = Path("results")
    format: OutputFormat = OutputFormat.CSV


@dataclass(frozen=True)
class ImbalanceSweep:
    r: float = 0.4
    epsilons: tuple[float, ...] = (0.005, 0.01, 0.02, 0.05)


@dataclass(frozen=True)
class EngineOptions:
    backend: str = "auto"
    scan_points: int = 64
    bench_modes: int = 6700
    bench_dense_modes: int = 60
    bench_compare_modes: int = 256


@dataclass(frozen=True)
class RunConfig:
    """Everything one command-line run needs, validated at load time."""

    comb: CombSpec = field(default_factory=lambda: CombSpec(n_min=-15, n_max=14))
    pumps: PumpConfig = field(
        default_factory=lambda: PumpConfig(p_z=1, p_y=-1, r_z=DEFAULT_R, r_y=DEFAULT_R),
    )
    bhd: BhdConfig = field(
        default_factory=lambda: BhdConfig(dark_to_shot=10 ** (DEFAULT_DARK_DB / 10)),
    )
    imbalance: ImbalanceSweep = field(default_factory=ImbalanceSweep)
    output: OutputConfig = field(default_factory=OutputConfig)
    engine: EngineOptions = field(default_factory=EngineOptions)
    settings: EngineSettings = field(default_factory=get_settings)
