# src/core/use_cases/scan_homodyne.py
from dataclasses import dataclass

from core.entities.homodyne import ScanTrace
from core.entities.run_config import RunConfig
from core.ports.result_writer_port import ResultWriterPort
from services.gaussian.engine import GaussianEngine
from services.homodyne.detection import phase_scan, theta_grid


@dataclass
class ScanHomodyneUseCase:
    """Use case for simulating a two-tone homodyne LO phase scan."""

    engine: GaussianEngine
    writer: ResultWriterPort

    def execute(self, config: RunConfig) -> ScanTrace:
        """
        Scan the LO phase over the configured grid and write the trace.

        Args:
            config: Validated run configuration

        Returns:
            Trace with raw and noise-corrected columns
        """
        state = self.engine.build_comb_state(
            config.pumps,
            config.comb,
            config.engine.backend,
        )
        trace = phase_scan(
            self.engine,
            state,
            config.bhd,
            config.pumps,
            config.comb,
            theta_grid(config.engine.scan_points).tolist(),
        )
        rows = [point.as_row() for point in trace.points]
        self.writer.write_table("scan", ScanTrace.HEADER, rows)
        self.writer.write_document(
            "scan_meta",
            {
                "observable": trace.observable,
                "upper": trace.selection.upper,
                "lower": trace.selection.lower,
                "phasematched": trace.selection.phasematched,
                "floor_db": trace.floor_db,
                "dark_to_shot": config.bhd.dark_to_shot,
                "theta_o": config.bhd.theta_o,
            },
        )
        return trace
