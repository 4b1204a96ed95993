# tests/core/use_cases/test_tabulate_nullifiers.py
import dataclasses

import pytest

from core.entities.nullifier import NullifierKind, NullifierRow
from core.use_cases.tabulate_nullifiers import TabulateNullifiersUseCase

BEAM_SPLITTER = (NullifierKind.BS_Q, NullifierKind.BS_P)
GRAPH = (NullifierKind.GRAPH_Z, NullifierKind.GRAPH_Y)


class TestTabulateNullifiersUseCase:
    """Test TabulateNullifiersUseCase."""

    @pytest.fixture()
    def use_case(self, engine, writer):
        """Create use case with a real engine and a mock writer."""
        return TabulateNullifiersUseCase(engine, writer)

    def test_beam_splitter_and_graph_rows(self, use_case, writer, small_config):
        """Test beam-splitter rows plus graph rows from the shifted frame."""
        rows = use_case.execute(small_config)

        kinds = [row.kind for row in rows]
        assert sum(kind in BEAM_SPLITTER for kind in kinds) == 24
        assert len(rows) == 50
        name, header, table = writer.write_table.call_args.args
        assert (name, header) == ("nullifiers", NullifierRow.HEADER)
        assert len(table) == len(rows)

    def test_even_pumps_skip_graph_rows(self, use_case, small_config, caplog):
        """Test even pump indices give beam-splitter rows only and a warning."""
        pumps = dataclasses.replace(small_config.pumps, p_z=2, p_y=0)
        config = dataclasses.replace(small_config, pumps=pumps)

        rows = use_case.execute(config)

        assert rows
        assert all(row.kind not in GRAPH for row in rows)
        assert "Skipping graph nullifiers" in caplog.text

    def test_rows_are_squeezed(self, use_case, small_config):
        """Test every beam-splitter row sits below shot noise."""
        rows = use_case.execute(small_config)
        assert all(row.db < 0 for row in rows if row.kind in BEAM_SPLITTER)


    def test_two_wires_get_their_own_tables(self, use_case, writer, small_config):
        """Test two wires give a combined table plus one identical table each."""
        pumps = dataclasses.replace(small_config.pumps, p_z=3, p_y=-1)
        config = dataclasses.replace(small_config, pumps=pumps)

        rows = use_case.execute(config)

        names = [call.args[0] for call in writer.write_table.call_args_list]
        assert names == ["nullifiers", "nullifiers_wire0", "nullifiers_wire1"]
        for w in (0, 1):
            wire_rows = [row for row in rows if row.wire == w]
            bs_db = [row.db for row in wire_rows if row.kind in BEAM_SPLITTER]
            assert bs_db
            assert bs_db == pytest.approx([-3.2] * len(bs_db), abs=1e-6)
