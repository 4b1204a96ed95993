# tests/core/use_cases/conftest.py
from pathlib import Path
from unittest.mock import Mock

import pytest

from core.entities.comb import CombSpec
from core.entities.run_config import RunConfig
from core.ports.result_writer_port import ResultWriterPort


@pytest.fixture()
def writer():
    """Create a result writer mock returning a fixed path."""
    mock = Mock(spec=ResultWriterPort)
    mock.write_table.return_value = Path("table.csv")
    mock.write_document.return_value = Path("doc.json")
    mock.write_matrix.return_value = Path("matrix.csv")
    return mock


@pytest.fixture()
def small_config():
    """Create a run on the 13-frequency slice [-6, 6]."""
    return RunConfig(comb=CombSpec(n_min=-6, n_max=6))
