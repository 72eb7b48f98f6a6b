"""Synthesis-time conversion."""
import pytest

from qpecost import synthesis_time
from qpecost.config import SurfaceCodeConfig


def test_zero_count_zero_time():
    assert synthesis_time(0, SurfaceCodeConfig()) == 0.0


def test_single_factory_value():
    cfg = SurfaceCodeConfig(t_per_magic_state_seconds=1e-4, n_factories=1)
    assert synthesis_time(10 ** 6, cfg) == pytest.approx(100.0)


def test_inverse_linear_in_factories():
    cfg = SurfaceCodeConfig(t_per_magic_state_seconds=1e-4, n_factories=10)
    assert synthesis_time(10 ** 6, cfg) == pytest.approx(10.0)


def test_exact_linearity_identities():
    cfg1 = SurfaceCodeConfig(t_per_magic_state_seconds=2e-5, n_factories=1)
    base = synthesis_time(12345, cfg1)
    assert synthesis_time(2 * 12345, cfg1) == pytest.approx(2 * base)
    cfg4 = SurfaceCodeConfig(t_per_magic_state_seconds=2e-5, n_factories=4)
    assert synthesis_time(12345, cfg4) == pytest.approx(base / 4)


def test_rejects_negative_count():
    with pytest.raises(ValueError):
        synthesis_time(-1, SurfaceCodeConfig())


def test_rejects_bad_config():
    with pytest.raises(ValueError):
        SurfaceCodeConfig(t_per_magic_state_seconds=0.0)
    with pytest.raises(ValueError):
        SurfaceCodeConfig(n_factories=0)
