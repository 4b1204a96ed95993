# src/core/use_cases/dump_covariance.py
from dataclasses import dataclass
from pathlib import Path

from core.entities.run_config import RunConfig
from core.ports.result_writer_port import ResultWriterPort
from services.gaussian.engine import GaussianEngine


@dataclass
class DumpCovarianceUseCase:
    """Use case for exporting the comb state's covariance matrix."""

    engine: GaussianEngine
    writer: ResultWriterPort

    def execute(self, config: RunConfig) -> list[Path]:
        state = self.engine.build_comb_state(
            config.pumps,
            config.comb,
            config.engine.backend,
        )
        matrix, metadata = self.engine.covariance_dump(state)
        return [
            self.writer.write_matrix("covariance", matrix),
            self.writer.write_document("covariance_meta", metadata),
        ]
