# src/adapters/outbound/config/config_adapter.py
import json
import logging
from pathlib import Path
from typing import Any

import yaml
from jsonschema import Draft202012Validator
from pydantic import ValidationError as SettingsValidationError

from core.entities.comb import CombSpec, Polarization, PumpConfig
from core.entities.homodyne import DEFAULT_MODULATOR_BANDWIDTH, BhdConfig
from core.entities.run_config import (
    DEFAULT_DARK_DB,
    DEFAULT_R,
    EngineOptions,
    ImbalanceSweep,
    OutputConfig,
    OutputFormat,
    RunConfig,
)
from infrastructure.error_handling.exceptions import (
    ConfigNotFoundError,
    ConfigValidationError,
    InvariantViolationError,
)
from infrastructure.settings import settings_with_overrides

logger = logging.getLogger(__name__)

DEFAULT_SCHEMA_PATH = Path(__file__).with_name("run_config.schema.json")

# run-file sections that feed engine settings
SETTINGS_KEYS = {
    ("tolerances", "symmetry_tol"),
    ("tolerances", "symplectic_tol"),
    ("tolerances", "purity_tol"),
    ("tolerances", "dense_threshold"),
    ("engine", "log_level"),
    ("engine", "log_json"),
}


class FileConfigAdapter:
    """Adapter for loading run configuration from YAML files."""

    def __init__(self, schema_path: str | Path = DEFAULT_SCHEMA_PATH):
        """
        Initialize config adapter.

        Args:
            schema_path: Path to JSON schema for validation
        """
        self.schema_path = Path(schema_path)
        self._validator = Draft202012Validator(self._load_schema())

    def _load_schema(self) -> dict[str, Any]:
        """Load JSON schema for config validation."""
        with open(self.schema_path) as f:
            return json.load(f)

    def load_run_config(
        self,
        path: Path | None,
        overrides: dict[str, Any] | None = None,
    ) -> RunConfig:
        """
        Load a run configuration and apply command-line overrides.

        Args:
            path: YAML run file, or None to start from built-in defaults
            overrides: Flag values keyed by dotted section path, e.g. "pumps.p_z"

        Returns:
            Validated RunConfig

        Raises:
            ConfigNotFoundError: If the run file doesn't exist
            ConfigValidationError: If the file or an override is invalid
        """
        raw, tree = self._read(path)
        flagged = self._apply_overrides(raw, overrides or {})

        errors = sorted(
            self._validator.iter_errors(raw),
            key=lambda e: list(e.absolute_path),
        )
        if errors:
            error = errors[0]
            location = [str(part) for part in error.absolute_path]
            raise ConfigValidationError(
                f"Invalid config at {'.'.join(location) or '<root>'}: {error.message}",
                line=self._line(tree, location, flagged),
                flag=tuple(location[:2]) in flagged,
            )
        return self._build(raw, tree, flagged)

    def _read(self, path: Path | None) -> tuple[dict[str, Any], yaml.Node | None]:
        if path is None:
            return {}, None
        if not path.exists():
            raise ConfigNotFoundError(f"Config not found: {path}")
        text = path.read_text()
        try:
            tree = yaml.compose(text, Loader=yaml.SafeLoader)
            raw = yaml.safe_load(text)
        except yaml.MarkedYAMLError as e:
            line = e.problem_mark.line + 1 if e.problem_mark is not None else None
            raise ConfigValidationError(
                f"Failed to parse config: {e.problem}",
                line=line,
            ) from e
        if raw is None:
            return {}, tree
        if not isinstance(raw, dict):
            raise ConfigValidationError("Config root must be a mapping", line=1)
        return raw, tree

    def _apply_overrides(
        self,
        raw: dict[str, Any],
        overrides: dict[str, Any],
    ) -> set[tuple[str, ...]]:
        flagged = set()
        for dotted, value in overrides.items():
            if value is None:
                continue
            section, key = dotted.split(".", 1)
            block = raw.setdefault(section, {})
            if not isinstance(block, dict):
                block = raw[section] = {}
            block[key] = value
            if (section, key) == ("bhd", "dark_db"):
                block.pop("dark_to_shot", None)
            flagged.add((section, key))
        return flagged

    def _line(
        self,
        tree: yaml.Node | None,
        location: list[str],
        flagged: set[tuple[str, ...]],
    ) -> int | None:
        """1-based line of the deepest existing key on `location`, None for flags."""
        if tuple(location[:2]) in flagged:
            return None
        node = tree
        line = 1 if tree is not None else None
        for part in location:
            if isinstance(node, yaml.MappingNode):
                match = next((v for k, v in node.value if k.value == part), None)
                key_node = next((k for k, _ in node.value if k.value == part), None)
                if match is None or key_node is None:
                    break
                line = key_node.start_mark.line + 1
                node = match
            elif (
                isinstance(node, yaml.SequenceNode)
                and part.isdigit()
                and int(part) < len(node.value)
            ):
                node = node.value[int(part)]
                line = node.start_mark.line + 1
            else:
                break
        return line

    def _build(
        self,
        raw: dict[str, Any],
        tree: yaml.Node | None,
        flagged: set[tuple[str, ...]],
    ) -> RunConfig:
        section = ""
        try:
            section = "comb"
            comb_raw = raw.get("comb", {})
            comb = CombSpec(
                n_min=comb_raw.get("n_min", -15),
                n_max=comb_raw.get("n_max", 14),
                delta_omega=comb_raw.get("delta_omega", 945.66e6),
                omega0=comb_raw.get("omega0", 0.0),
            )

            section = "pumps"
            pumps_raw = raw.get("pumps", {})
            r = pumps_raw.get("r", DEFAULT_R)
            pumps = PumpConfig(
                p_z=pumps_raw.get("p_z", 1),
                p_y=pumps_raw.get("p_y", -1),
                r_z=pumps_raw.get("r_z", r),
                r_y=pumps_raw.get("r_y", r),
            )

            section = "bhd"
            bhd_raw = raw.get("bhd", {})
            dark = bhd_raw.get("dark_to_shot")
            if dark is None:
                dark = 10 ** (bhd_raw.get("dark_db", DEFAULT_DARK_DB) / 10)
            bhd = BhdConfig(
                lo_center_pump=Polarization(bhd_raw.get("lo_center_pump", "y")),
                lo_offset=bhd_raw.get("lo_offset", 0.0),
                sideband_n=bhd_raw.get("sideband_n", 0),
                theta_lo=bhd_raw.get("theta_lo", 0.0),
                theta_o=bhd_raw.get("theta_o", 0.0),
                dark_to_shot=dark,
                modulator_bandwidth=bhd_raw.get(
                    "modulator_bandwidth",
                    DEFAULT_MODULATOR_BANDWIDTH,
                ),
            )

            section = "imbalance"
            imbalance_raw = raw.get("imbalance", {})
            defaults = ImbalanceSweep()
            imbalance = ImbalanceSweep(
                r=imbalance_raw.get("r", defaults.r),
                epsilons=tuple(imbalance_raw.get("epsilons", defaults.epsilons)),
            )
            if any(abs(eps) >= imbalance.r for eps in imbalance.epsilons):
                raise InvariantViolationError(
                    "every |epsilon| must be below imbalance.r",
                )

            section = "output"
            output_raw = raw.get("output", {})
            output = OutputConfig(
                directory=Path(output_raw.get("directory", "results")),
                format=OutputFormat(output_raw.get("format", "csv")),
            )

            section = "engine"
            engine_raw = raw.get("engine", {})
            engine_defaults = EngineOptions()
            engine = EngineOptions(
                backend=engine_raw.get("backend", engine_defaults.backend),
                scan_points=engine_raw.get("scan_points", engine_defaults.scan_points),
                bench_modes=engine_raw.get("bench_modes", engine_defaults.bench_modes),
                bench_dense_modes=engine_raw.get(
                    "bench_dense_modes",
                    engine_defaults.bench_dense_modes,
                ),
                bench_compare_modes=engine_raw.get(
                    "bench_compare_modes",
                    engine_defaults.bench_compare_modes,
                ),
            )

            section = "tolerances"
            settings_overrides = {
                key: raw[sec][key]
                for sec, key in SETTINGS_KEYS
                if key in raw.get(sec, {})
            }
            settings = settings_with_overrides(settings_overrides)
        except (InvariantViolationError, SettingsValidationError, ValueError) as e:
            flagged_section = any(sec == section for sec, _ in flagged)
            line = None if flagged_section else self._line(tree, [section], set())
            raise ConfigValidationError(
                f"Invalid {section} section: {e}",
                line=line,
                flag=flagged_section,
            ) from e

        logger.debug("Loaded run config", extra={"sections": sorted(raw)})
        return RunConfig(
            comb=comb,
            pumps=pumps,
            bhd=bhd,
            imbalance=imbalance,
            output=output,
            engine=engine,
            settings=settings,
        )
