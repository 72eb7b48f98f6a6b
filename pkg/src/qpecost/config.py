"""Run configuration: cost-model knobs and the flat key=value config file."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, fields
from pathlib import Path


@dataclass(frozen=True)
class SurfaceCodeConfig:
    """Magic-state throughput of the assumed surface-code layout.

    The defaults are placeholders for a mid-range distillation setup, not
    values fixed by any particular protocol; override them in the config
    file for a concrete architecture.
    """
    t_per_magic_state_seconds: float = 1e-4
    n_factories: int = 1

    def __post_init__(self):
        if self.t_per_magic_state_seconds <= 0:
            raise ValueError("t_per_magic_state_seconds must be > 0")
        if self.n_factories < 1:
            raise ValueError("n_factories must be >= 1")


@dataclass(frozen=True)
class CostModelConfig:
    """Shared cost-model parameters.

    arith_bits: register width for arithmetic whose precision is not pinned
        by a derived constant.
    taylor_argument_bound: magnitude of the series argument after free
        power-of-two range reduction; sets the expansion order needed to
        reach a given eps_tay.
    qpe_failure_prob: additive failure probability of the phase-estimation
        routine used by the randomized product-formula estimators.
    arccos_walk_multiplier: segment-count inflation when phase-estimating
        the arccos walk instead of the plain evolution (ratio of the ln 2
        segment length to the shortened effective one, ln2 * e).
    """
    arith_bits: int = 32
    taylor_argument_bound: float = 1.0
    qpe_failure_prob: float = 1e-2
    arccos_walk_multiplier: float = math.e * math.log(2)
    plane_wave_multiplier: float = 100.0
    ci_iteration_cap: int = 100
    ci_rel_tol: float = 1e-6
    surface: SurfaceCodeConfig = field(default_factory=SurfaceCodeConfig)

    def taylor_order(self, eps_tay: float) -> int:
        """Smallest order with series remainder bound^o / o! <= eps_tay."""
        if eps_tay <= 0:
            raise ValueError(f"eps_tay must be > 0, got {eps_tay}")
        order = 1
        term = self.taylor_argument_bound
        while term > eps_tay and order < 64:
            order += 1
            term *= self.taylor_argument_bound / order
        return order


@dataclass
class RunConfig:
    """Everything the command-line pipeline needs for one run."""
    basis: str = "6-31g"
    budget_total: float = 0.0015
    trials: int = 1000
    seed: int = 0
    plane_wave_multiplier: float = 100.0
    t_per_magic_state_seconds: float = 1e-4
    n_factories: int = 1
    arith_bits: int = 32
    qpe_failure_prob: float = 1e-2
    params_dir: str = ""

    def cost_model(self) -> CostModelConfig:
        return CostModelConfig(
            arith_bits=self.arith_bits,
            qpe_failure_prob=self.qpe_failure_prob,
            plane_wave_multiplier=self.plane_wave_multiplier,
            surface=SurfaceCodeConfig(
                t_per_magic_state_seconds=self.t_per_magic_state_seconds,
                n_factories=self.n_factories))


_CASTS = {int: int, float: float, str: str}


def load_run_config(path: str | Path | None) -> RunConfig:
    """Parse a flat `key = value` config file (# starts a comment)."""
    cfg = RunConfig()
    if path is None:
        return cfg
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"config file not found: {path}")
    known = {f.name: f.type for f in fields(RunConfig)}
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key = value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in known:
            raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
        current = getattr(cfg, key)
        cast = type(current)
        try:
            setattr(cfg, key, cast(value))
        except ValueError as exc:
            raise ValueError(
                f"{path}:{lineno}: bad value for {key}: {value!r}") from exc
    return cfg
