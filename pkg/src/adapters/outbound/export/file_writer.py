# src/adapters/outbound/export/file_writer.py
import csv
import json
import logging
from collections.abc import Sequence
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np

from core.entities.run_config import OutputFormat
from infrastructure.error_handling.exceptions import ExportError

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 9


def format_number(value: float) -> str:
    return format(value, f".{SIGNIFICANT_DIGITS}g")


def normalize(value: Any) -> Any:
    """Round floats to the output precision and make values JSON-ready."""
    if isinstance(value, bool) or value is None or isinstance(value, str | int):
        return value
    if isinstance(value, float | np.floating):
        return float(format_number(float(value)))
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, dict):
        return {str(k): normalize(v) for k, v in value.items()}
    if isinstance(value, list | tuple | np.ndarray):
        return [normalize(v) for v in value]
    return str(value)


def _cell(value: Any) -> Any:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float | np.floating):
        return format_number(float(value))
    return value


class FileResultWriter:
    """Adapter writing CSV and JSON result files into one directory."""

    def __init__(self, directory: str | Path, fmt: OutputFormat = OutputFormat.CSV):
        """
        Initialize result writer.

        Args:
            directory: Output directory, created on first write
            fmt: Format used for tables
        """
        self.directory = Path(directory)
        self.format = fmt
        self.written: list[Path] = []

    def _target(self, name: str, suffix: str) -> Path:
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ExportError(
                f"Cannot create output directory {self.directory}: {e}",
            ) from e
        return self.directory / f"{name}.{suffix}"

    def _finish(self, path: Path) -> Path:
        self.written.append(path)
        logger.info("Wrote result file", extra={"path": str(path)})
        return path

    def write_table(
        self,
        name: str,
        header: Sequence[str],
        rows: Sequence[Sequence[Any]],
    ) -> Path:
        if self.format is OutputFormat.JSON:
            records = [dict(zip(header, row, strict=True)) for row in rows]
            return self.write_document(name, {"columns": list(header), "rows": records})
        path = self._target(name, "csv")
        try:
            with open(path, "w", newline="") as f:
                writer = csv.writer(f, lineterminator="\n")
                writer.writerow(header)
                writer.writerows([_cell(value) for value in row] for row in rows)
        except OSError as e:
            raise ExportError(f"Failed to write {path}: {e}") from e
        return self._finish(path)

    def write_document(self, name: str, payload: dict[str, Any]) -> Path:
        path = self._target(name, "json")
        try:
            text = json.dumps(normalize(payload), indent=2, sort_keys=True)
            path.write_text(text + "\n")
        except (OSError, TypeError, ValueError) as e:
            raise ExportError(f"Failed to write {path}: {e}") from e
        return self._finish(path)

    def write_matrix(self, name: str, matrix: np.ndarray) -> Path:
        path = self._target(name, "csv")
        try:
            with open(path, "w", newline="") as f:
                writer = csv.writer(f, lineterminator="\n")
                writer.writerows(
                    [format_number(float(v)) for v in row] for row in matrix
                )
        except OSError as e:
            raise ExportError(f"Failed to write {path}: {e}") from e
        return self._finish(path)
