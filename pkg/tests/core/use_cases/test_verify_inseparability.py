# tests/core/use_cases/test_verify_inseparability.py
import dataclasses

from core.use_cases.verify_inseparability import VerifyInseparabilityUseCase


class TestVerifyInseparabilityUseCase:
    """Test VerifyInseparabilityUseCase."""

    def test_report_document(self, engine, writer, small_config):
        """Test the report covers every wire and stays independent across wires."""
        pumps = dataclasses.replace(small_config.pumps, r_z=0.4, r_y=0.4)
        config = dataclasses.replace(small_config, pumps=pumps)

        reports = VerifyInseparabilityUseCase(engine, writer).execute(config)

        name, payload = writer.write_document.call_args.args
        assert name == "vlf"
        assert set(payload) == {"wires", "all_inseparable", "cross_wire_max_abs_cov"}
        assert len(payload["wires"]) == len(reports) == 1
        assert payload["all_inseparable"] is True
        assert payload["cross_wire_max_abs_cov"] == 0.0

    def test_two_wires(self, engine, writer, small_config):
        """Test p_z = 3 gives two wires with no covariance between them."""
        pumps = dataclasses.replace(small_config.pumps, p_z=3, r_z=0.4, r_y=0.4)
        config = dataclasses.replace(small_config, pumps=pumps)

        reports = VerifyInseparabilityUseCase(engine, writer).execute(config)

        _, payload = writer.write_document.call_args.args
        assert len(reports) == 2
        assert payload["cross_wire_max_abs_cov"] == 0.0
