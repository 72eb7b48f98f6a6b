"""Conversion from a T-count to wall-clock magic-state synthesis time."""
from .config import SurfaceCodeConfig


def synthesis_time(t_count: int, cfg: SurfaceCodeConfig) -> float:
    """Seconds to distill `t_count` magic states on the configured factories.

    Linear in the count and inversely linear in the factory number; the
    per-state time is a configuration placeholder, not a derived quantity.
    """
    if t_count < 0:
        raise ValueError(f"t_count must be >= 0, got {t_count}")
    return t_count * cfg.t_per_magic_state_seconds / cfg.n_factories
