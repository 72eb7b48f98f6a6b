"""Cost-breakdown record shared by all method estimators."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CostBreakdown:
    """Total T-count of one estimator plus its derived internal constants.

    subtotals: per-stage T-counts; their sum must equal `total`.
    r: segment/step count; K: series truncation order; M: discretisation
    constant; mu: Riemann point count or coefficient precision bits
    (method-dependent); zeta: self-inverse decomposition scale; M0_bits:
    amplitude precision register size; n_rotations: synthesized-rotation
    count used to derive eps_ss from eps_s.
    """
    method: str
    total: int
    subtotals: dict[str, int]
    r: int
    K: int | None = None
    M: float | None = None
    mu: float | None = None
    zeta: float | None = None
    M0_bits: int | None = None
    n_rotations: int = 0
    eps_ss: float | None = None
    constants: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.total != sum(self.subtotals.values()):
            raise ValueError(
                f"{self.method}: total {self.total} != sum of subtotals "
                f"{sum(self.subtotals.values())}")
        if self.total < 0:
            raise ValueError(f"{self.method}: negative total {self.total}")
        if self.r < 1:
            raise ValueError(f"{self.method}: segment count must be >= 1")
        for name in ("K", "M", "mu", "zeta", "M0_bits"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(
                    f"{self.method}: derived constant {name}={value} "
                    "must be positive")
