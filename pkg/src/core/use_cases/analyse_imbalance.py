# src/core/use_cases/analyse_imbalance.py
from dataclasses import dataclass

from core.entities.imbalance import ImbalanceReport
from core.entities.run_config import RunConfig
from core.ports.result_writer_port import ResultWriterPort
from services.gaussian.engine import GaussianEngine
from services.imperfect.imbalance import imbalance_sweep, loglog_slope


@dataclass
class AnalyseImbalanceUseCase:
    """Use case for sweeping the pump squeezing imbalance."""

    engine: GaussianEngine
    writer: ResultWriterPort

    def execute(self, config: RunConfig) -> list[ImbalanceReport]:
        reports = imbalance_sweep(
            self.engine,
            config.imbalance.r,
            config.imbalance.epsilons,
            config.comb,
            config.engine.backend,
        )
        self.writer.write_table(
            "imbalance",
            ImbalanceReport.HEADER,
            [report.as_row() for report in reports],
        )
        payload: dict[str, object] = {
            "r": config.imbalance.r,
            "reports": [report.to_payload() for report in reports],
        }
        nonzero = [report for report in reports if report.epsilon != 0]
        if len(nonzero) >= 2:
            epsilons = [report.epsilon for report in nonzero]
            residuals = [report.residual for report in nonzero]
            correlations = [report.zy_correlation for report in nonzero]
            payload["residual_slope"] = loglog_slope(epsilons, residuals)
            payload["zy_slope"] = loglog_slope(epsilons, correlations)
        self.writer.write_document("imbalance_summary", payload)
        return reports
