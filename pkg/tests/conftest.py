# tests/conftest.py
"""Shared test fixtures and configuration."""

import math

import pytest

from adapters.outbound.covariance.registry import CovarianceBackendRegistry
from core.entities.comb import CombSpec, PumpConfig
from infrastructure.settings import EngineSettings
from services.gaussian.engine import GaussianEngine

# r giving exactly -3.2 dB of two-mode squeezing
RAW_R = 0.16 * math.log(10)
RAW_RATIO = 10 ** (-0.32)


def make_engine(dense_threshold: int = 512) -> GaussianEngine:
    settings = EngineSettings(dense_threshold=dense_threshold)
    return GaussianEngine(
        backends=CovarianceBackendRegistry(settings.dense_threshold),
        settings=settings,
    )


@pytest.fixture()
def engine():
    """Create an engine with the default dense threshold."""
    return make_engine()


@pytest.fixture()
def comb():
    """Create the default 30-frequency comb slice [-15, 14]."""
    return CombSpec(n_min=-15, n_max=14)


@pytest.fixture()
def pumps():
    """Create the single-wire pump pair p_z=1, p_y=-1 at -3.2 dB."""
    return PumpConfig(p_z=1, p_y=-1, r_z=RAW_R, r_y=RAW_R)


@pytest.fixture()
def two_wire_pumps():
    """Create the two-wire pump pair p_z=3, p_y=-1 at -3.2 dB."""
    return PumpConfig(p_z=3, p_y=-1, r_z=RAW_R, r_y=RAW_R)


@pytest.fixture()
def comb_state(engine, pumps, comb):
    """Build the comb state after the polarization beam splitter."""
    return engine.build_comb_state(pumps, comb)


@pytest.fixture()
def graph_state(engine, pumps, comb):
    """Build the Fourier-shifted graph frame of the comb state."""
    return engine.build_graph_state(pumps, comb)
