# tests/core/use_cases/test_dump_covariance.py
import numpy as np

from core.entities.run_config import RunConfig
from core.use_cases.dump_covariance import DumpCovarianceUseCase


class TestDumpCovarianceUseCase:
    """Test DumpCovarianceUseCase."""

    def test_dumps_matrix_and_metadata(self, engine, writer):
        """Test the default comb gives a symmetric 120 x 120 matrix and its ordering."""
        paths = DumpCovarianceUseCase(engine, writer).execute(RunConfig())

        assert len(paths) == 2
        name, matrix = writer.write_matrix.call_args.args
        assert name == "covariance"
        assert matrix.shape == (120, 120)
        np.testing.assert_allclose(matrix, matrix.T, atol=1e-12)

        name, meta = writer.write_document.call_args.args
        assert name == "covariance_meta"
        assert meta["M"] == 60
        assert meta["v0"] == 0.5
        assert meta["ordering"] == "Q_1..Q_M,P_1..P_M"
