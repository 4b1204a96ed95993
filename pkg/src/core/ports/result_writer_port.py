# src/core/ports/result_writer_port.py
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Protocol

import numpy as np


class ResultWriterPort(Protocol):
    """Port for persisting run results."""

    def write_table(
        self,
        name: str,
        header: Sequence[str],
        rows: Sequence[Sequence[Any]],
    ) -> Path:
        """
        Write a table of rows.

        Args:
            name: File stem
            header: Column names
            rows: Row values in header order

        Returns:
            Path of the written file

        Raises:
            ExportError: If the file cannot be written
        """
        ...

    def write_document(self, name: str, payload: dict[str, Any]) -> Path:
        """
        Write a structured document as JSON.

        Raises:
            ExportError: If the file cannot be written
        """
        ...

    def write_matrix(self, name: str, matrix: np.ndarray) -> Path:
        """
        Write a full matrix as row-major CSV.

        Raises:
            ExportError: If the file cannot be written
        """
        ...
