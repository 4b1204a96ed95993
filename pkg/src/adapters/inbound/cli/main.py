# src/adapters/inbound/cli/main.py
import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from adapters.outbound.config.config_adapter import FileConfigAdapter
from adapters.outbound.covariance.registry import (
    BACKEND_CHOICES,
    CovarianceBackendRegistry,
)
from adapters.outbound.export.file_writer import FileResultWriter
from core.entities.run_config import RunConfig
from core.use_cases.analyse_imbalance import AnalyseImbalanceUseCase
from core.use_cases.benchmark_scale import BenchmarkScaleUseCase
from core.use_cases.dump_covariance import DumpCovarianceUseCase
from core.use_cases.list_wires import ListWiresUseCase
from core.use_cases.scan_homodyne import ScanHomodyneUseCase
from core.use_cases.tabulate_nullifiers import TabulateNullifiersUseCase
from core.use_cases.verify_inseparability import VerifyInseparabilityUseCase
from infrastructure.error_handling.exceptions import (
    ConfigNotFoundError,
    ConfigValidationError,
    InvariantViolationError,
    exit_code_for,
)
from infrastructure.logging import configure_logging
from infrastructure.settings import get_settings
from qofc_cluster import __version__
from services.gaussian.engine import GaussianEngine

logger = logging.getLogger(__name__)

COMMANDS = ("wires", "nullifiers", "scan", "vlf", "imperfect", "bench", "covariance")

# flag destination -> dotted run-file keys it overrides
FLAG_TARGETS: dict[str, tuple[str, ...]] = {
    "r": ("pumps.r_z", "pumps.r_y"),
    "pz": ("pumps.p_z",),
    "py": ("pumps.p_y",),
    "nmin": ("comb.n_min",),
    "nmax": ("comb.n_max",),
    "dark_db": ("bhd.dark_db",),
    "out": ("output.directory",),
    "format": ("output.format",),
    "backend": ("engine.backend",),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None, help="YAML run file")
    common.add_argument("--out", type=str, default=None, help="output directory")
    common.add_argument("--format", choices=["csv", "json"], default=None)
    common.add_argument("--r", type=float, help="squeezing r for both pumps")
    common.add_argument("--epsilon", type=float, help="single pump imbalance")
    common.add_argument("--pz", type=int, default=None)
    common.add_argument("--py", type=int, default=None)
    common.add_argument("--nmin", type=int, default=None)
    common.add_argument("--nmax", type=int, default=None)
    common.add_argument(
        "--dark-db",
        dest="dark_db",
        type=float,
        default=None,
        help="electronic noise relative to shot noise in dB (default -13)",
    )
    common.add_argument("--backend", choices=BACKEND_CHOICES, default=None)

    parser = argparse.ArgumentParser(
        prog="qofc-cluster",
        description="Dual-rail cluster states in an OPO frequency comb: wires, "
        "nullifiers, homodyne scans and inseparability checks.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command, help_text in (
        ("wires", "list wire sequences and cluster graphs"),
        ("nullifiers", "tabulate every nullifier along every wire"),
        ("scan", "simulate a homodyne LO phase scan"),
        ("vlf", "check separability bounds on every unit cell"),
        ("imperfect", "sweep the pump squeezing imbalance"),
        ("bench", "time the dense and sparse covariance paths"),
        ("covariance", "dump the comb state's covariance matrix"),
    ):
        subparsers.add_parser(command, parents=[common], help=help_text)
    return parser


def collect_overrides(args: argparse.Namespace) -> dict[str, Any]:
    overrides: dict[str, Any] = {}
    for dest, targets in FLAG_TARGETS.items():
        value = getattr(args, dest, None)
        if value is not None:
            overrides.update(dict.fromkeys(targets, value))
    if args.epsilon is not None:
        overrides["imbalance.epsilons"] = [args.epsilon]
    return overrides


def run_command(command: str, config: RunConfig) -> list[Path]:
    """Wire adapters into the command's use case and run it."""
    registry = CovarianceBackendRegistry(config.settings.dense_threshold)
    engine = GaussianEngine(backends=registry, settings=config.settings)
    writer = FileResultWriter(config.output.directory, config.output.format)
    use_cases: dict[str, Callable[[], Any]] = {
        "wires": lambda: ListWiresUseCase(writer).execute(config),
        "nullifiers": lambda: TabulateNullifiersUseCase(engine, writer).execute(config),
        "scan": lambda: ScanHomodyneUseCase(engine, writer).execute(config),
        "vlf": lambda: VerifyInseparabilityUseCase(engine, writer).execute(config),
        "imperfect": lambda: AnalyseImbalanceUseCase(engine, writer).execute(config),
        "bench": lambda: BenchmarkScaleUseCase(engine, writer).execute(config),
        "covariance": lambda: DumpCovarianceUseCase(engine, writer).execute(config),
    }
    use_cases[command]()
    return writer.written


def report_error(error: Exception) -> int:
    code = exit_code_for(error)
    print(
        json.dumps(
            {"error": type(error).__name__, "message": str(error), "exit_code": code},
            sort_keys=True,
        ),
        file=sys.stderr,
    )
    return code


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; 0 on success, 2 on config errors, 3 on invariant violations."""
    args = build_parser().parse_args(argv)
    env_settings = get_settings()
    configure_logging(env_settings.log_level, env_settings.log_json)
    try:
        overrides = collect_overrides(args)
        config = FileConfigAdapter().load_run_config(args.config, overrides)
        configure_logging(config.settings.log_level, config.settings.log_json)
        written = run_command(args.command, config)
    except (ConfigNotFoundError, ConfigValidationError, InvariantViolationError) as e:
        logger.error("Command failed", extra={"command": args.command, "error": str(e)})
        return report_error(e)

    print(json.dumps({"command": args.command, "files": [str(p) for p in written]}))
    return 0


if __name__ == "__main__":
    sys.exit(main())
