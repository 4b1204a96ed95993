# src/core/use_cases/verify_inseparability.py
from dataclasses import dataclass

from core.entities.entanglement import VlfReport
from core.entities.run_config import RunConfig
from core.ports.result_writer_port import ResultWriterPort
from services.comb.mode_arithmetic import extract_wires
from services.entanglement.vlf import cross_wire_independence, full_wire_inseparability
from services.gaussian.engine import GaussianEngine


@dataclass
class VerifyInseparabilityUseCase:
    """Use case for the full-wire separability checks."""

    engine: GaussianEngine
    writer: ResultWriterPort

    def execute(self, config: RunConfig) -> list[VlfReport]:
        """
        Check every unit cell of every wire and write the JSON report.

        Args:
            config: Validated run configuration

        Returns:
            One report per wire
        """
        pumps, comb = config.pumps, config.comb
        state = self.engine.build_comb_state(pumps, comb, config.engine.backend)
        reports = [
            full_wire_inseparability(self.engine, state, pumps, comb, wire, i)
            for i, wire in enumerate(extract_wires(pumps, comb))
        ]
        cross = cross_wire_independence(self.engine, state, pumps, comb)
        self.writer.write_document(
            "vlf",
            {
                "wires": [report.to_payload() for report in reports],
                "all_inseparable": all(report.inseparable for report in reports),
                "cross_wire_max_abs_cov": cross,
            },
        )
        return reports
