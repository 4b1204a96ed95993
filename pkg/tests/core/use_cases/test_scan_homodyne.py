# tests/core/use_cases/test_scan_homodyne.py
from core.entities.homodyne import ScanTrace
from core.use_cases.scan_homodyne import ScanHomodyneUseCase


class TestScanHomodyneUseCase:
    """Test ScanHomodyneUseCase."""

    def test_writes_trace_and_metadata(self, engine, writer, small_config):
        """Test the default scan writes 64 points and the sideband selection."""
        trace = ScanHomodyneUseCase(engine, writer).execute(small_config)

        name, header, rows = writer.write_table.call_args.args
        assert (name, header) == ("scan", ScanTrace.HEADER)
        assert len(rows) == 64 == len(trace.points)

        name, meta = writer.write_document.call_args.args
        assert name == "scan_meta"
        assert meta["upper"] == trace.selection.upper
        assert meta["lower"] == trace.selection.lower
        assert meta["floor_db"] == trace.floor_db

    def test_correction_deepens_squeezing(self, engine, writer, small_config):
        """Test removing dark noise deepens every squeezed point."""
        trace = ScanHomodyneUseCase(engine, writer).execute(small_config)
        squeezed = [point for point in trace.points if point.variance_db_raw < 0]
        assert squeezed
        assert all(p.variance_db_corrected <= p.variance_db_raw for p in squeezed)
