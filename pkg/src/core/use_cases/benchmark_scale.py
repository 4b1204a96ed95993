# src/core/use_cases/benchmark_scale.py
import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from core.entities.comb import CombSpec
from core.entities.run_config import RunConfig
from core.ports.result_writer_port import ResultWriterPort
from services.comb.mode_arithmetic import extract_wires
from services.gaussian.engine import GaussianEngine
from services.nullifier.observables import evaluate, wire_nullifiers

logger = logging.getLogger(__name__)

FLOAT_BYTES = 8


def comb_for_modes(modes: int, template: CombSpec) -> CombSpec:
    """Comb slice holding `modes` modes, two per frequency, centered on 0."""
    frequencies = max(modes // 2, 2)
    n_min = -(frequencies // 2)
    return CombSpec(
        n_min=n_min,
        n_max=n_min + frequencies - 1,
        delta_omega=template.delta_omega,
        omega0=template.omega0,
    )


@dataclass
class BenchmarkScaleUseCase:
    """Use case for timing the dense and sparse covariance paths."""

    engine: GaussianEngine
    writer: ResultWriterPort
    clock: Callable[[], float] = field(default=time.perf_counter)

    def _run(self, config: RunConfig, modes: int, backend: str) -> dict[str, Any]:
        comb = comb_for_modes(modes, config.comb)
        start = self.clock()
        state = self.engine.build_comb_state(config.pumps, comb, backend)
        built = self.clock()
        rows = evaluate(
            self.engine,
            state,
            wire_nullifiers(config.pumps, comb, extract_wires(config.pumps, comb)),
        )
        done = self.clock()
        storage = self.engine.backend_of(state).nbytes(state.cov)
        dense_footprint = (2 * state.mode_count) ** 2 * FLOAT_BYTES
        return {
            "modes": state.mode_count,
            "backend": state.backend,
            "build_seconds": built - start,
            "evaluate_seconds": done - built,
            "total_seconds": done - start,
            "nullifiers": len(rows),
            "storage_bytes": storage,
            "dense_bytes": dense_footprint,
            "memory_ratio": dense_footprint / storage if storage else None,
            "state": state,
        }

    def execute(self, config: RunConfig) -> dict[str, Any]:
        """
        Time the dense path, compare both paths, then run the sparse path at scale.

        Args:
            config: Validated run configuration

        Returns:
            Report with timings, footprints and the dense/sparse agreement

        Raises:
            DenseSizeError: If the dense comparison size exceeds the threshold
        """
        options = config.engine
        dense = self._run(config, options.bench_dense_modes, "dense")

        compare_dense = self._run(config, options.bench_compare_modes, "dense")
        compare_sparse = self._run(config, options.bench_compare_modes, "sparse")
        difference = float(
            np.max(
                np.abs(
                    self.engine.dense_cov(compare_dense["state"])
                    - self.engine.dense_cov(compare_sparse["state"]),
                ),
            ),
        )

        fast = self._run(config, options.bench_modes, "sparse")
        sections = {"dense": dense, "compare_sparse": compare_sparse, "fast": fast}
        report: dict[str, Any] = {
            name: {k: v for k, v in section.items() if k != "state"}
            for name, section in sections.items()
        }
        report["dense_sparse_max_abs_difference"] = difference
        report["dense_sparse_agree"] = difference <= config.settings.symmetry_tol
        logger.info(
            "Benchmark finished",
            extra={
                "fast_modes": fast["modes"],
                "fast_seconds": fast["total_seconds"],
                "memory_ratio": fast["memory_ratio"],
            },
        )
        self.writer.write_document("bench", report)
        return report
