# src/core/use_cases/tabulate_nullifiers.py
import logging
from dataclasses import dataclass

from core.entities.nullifier import NullifierRow
from core.entities.run_config import RunConfig
from core.ports.result_writer_port import ResultWriterPort
from services.comb.mode_arithmetic import extract_wires
from services.gaussian.engine import GaussianEngine
from services.nullifier.observables import (
    evaluate,
    uniformity_spread,
    wire_graph_nullifiers,
    wire_nullifiers,
)

logger = logging.getLogger(__name__)


@dataclass
class TabulateNullifiersUseCase:
    """Use case for evaluating every nullifier along every wire."""

    engine: GaussianEngine
    writer: ResultWriterPort

    def execute(self, config: RunConfig) -> list[NullifierRow]:
        """
        Evaluate beam-splitter and graph nullifiers and write the tables.

        The combined table always comes out; with several wires each wire
        also gets its own table.

        Beam-splitter nullifiers are evaluated on the comb state, graph
        nullifiers on its Fourier-shifted frame.

        Args:
            config: Validated run configuration

        Returns:
            Table rows, wire by wire
        """
        pumps, comb = config.pumps, config.comb
        wires = extract_wires(pumps, comb)
        state = self.engine.build_comb_state(pumps, comb, config.engine.backend)
        rows = evaluate(self.engine, state, wire_nullifiers(pumps, comb, wires))
        if pumps.has_odd_pumps:
            graph_state = self.engine.fourier_shift(state, pumps, comb)
            graph_nullifiers = wire_graph_nullifiers(pumps, comb, wires)
            rows += evaluate(self.engine, graph_state, graph_nullifiers)
        else:
            logger.warning("Skipping graph nullifiers for even pump indices")

        logger.info(
            "Tabulated nullifiers",
            extra={
                "rows": len(rows),
                "wires": len(wires),
                "spread_db": uniformity_spread(rows),
            },
        )
        self.writer.write_table(
            "nullifiers",
            NullifierRow.HEADER,
            [row.as_row() for row in rows],
        )
        if len(wires) > 1:
            for w in range(len(wires)):
                self.writer.write_table(
                    f"nullifiers_wire{w}",
                    NullifierRow.HEADER,
                    [row.as_row() for row in rows if row.wire == w],
                )
        return rows

