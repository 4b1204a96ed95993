# src/core/use_cases/list_wires.py
from dataclasses import dataclass

from core.entities.comb import WireGraph
from core.entities.run_config import RunConfig
from core.ports.result_writer_port import ResultWriterPort
from services.comb.mode_arithmetic import wire_graph, wires_payload

EDGE_HEADER = ("wire", "n", "pol", "n_other", "pol_other", "weight")


@dataclass
class ListWiresUseCase:
    """Use case for exporting the wire sequences and their cluster graphs."""

    writer: ResultWriterPort

    def execute(self, config: RunConfig) -> list[WireGraph]:
        """
        Extract wires and write them out.

        Args:
            config: Validated run configuration

        Returns:
            One WireGraph per wire
        """
        graphs = wire_graph(config.pumps, config.comb)
        self.writer.write_document("wires", wires_payload(graphs))
        rows = [
            [w, *edge.as_row()]
            for w, graph in enumerate(graphs)
            for edge in graph.edges
        ]
        self.writer.write_table("wire_edges", EDGE_HEADER, rows)
        return graphs
