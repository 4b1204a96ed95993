# tests/adapters/test_file_writer.py
import json
from pathlib import Path

import numpy as np
import pytest

from adapters.outbound.export.file_writer import (
    FileResultWriter,
    format_number,
    normalize,
)
from core.entities.run_config import OutputFormat
from infrastructure.error_handling.exceptions import ExportError


class TestFileResultWriter:
    """Test FileResultWriter."""

    def test_csv_table(self, tmp_path):
        """Test tables use nine significant digits and lowercase booleans."""
        writer = FileResultWriter(tmp_path / "out")
        rows = [[1, 1 / 3, True], [2, -3.2, False]]
        path = writer.write_table("rows", ("n", "value", "flag"), rows)
        assert path == tmp_path / "out" / "rows.csv"
        assert path.read_text() == "n,value,flag\n1,0.333333333,true\n2,-3.2,false\n"
        assert writer.written == [path]

    def test_json_table(self, tmp_path):
        """Test JSON format writes columns and records."""
        writer = FileResultWriter(tmp_path, OutputFormat.JSON)
        path = writer.write_table("rows", ("n", "dB"), [[1, -3.2000000001]])
        payload = json.loads(path.read_text())
        assert path.suffix == ".json"
        assert payload == {"columns": ["n", "dB"], "rows": [{"n": 1, "dB": -3.2}]}

    def test_document_is_sorted_and_normalized(self, tmp_path):
        """Test documents sort keys and convert numpy and path values."""
        writer = FileResultWriter(tmp_path)
        path = writer.write_document(
            "doc",
            {"b": np.float64(1 / 3), "a": np.int64(4), "c": Path("x"), "d": (1, None)},
        )
        text = path.read_text()
        assert text.index('"a"') < text.index('"b"') < text.index('"c"')
        assert json.loads(text) == {"a": 4, "b": 0.333333333, "c": "x", "d": [1, None]}

    def test_matrix(self, tmp_path):
        """Test matrices are written row by row without a header."""
        writer = FileResultWriter(tmp_path)
        path = writer.write_matrix("cov", np.array([[0.5, 0.0], [0.0, 2 / 3]]))
        assert path.read_text() == "0.5,0\n0,0.666666667\n"

    def test_unwritable_directory(self, tmp_path):
        """Test an output path blocked by a file raises ExportError."""
        blocker = tmp_path / "blocked"
        blocker.write_text("")
        with pytest.raises(ExportError):
            FileResultWriter(blocker).write_document("doc", {})

    def test_helpers(self):
        """Test number formatting and normalization."""
        assert format_number(123456789.123) == "123456789"
        assert normalize({"k": [np.float32(0.5), True]}) == {"k": [0.5, True]}
