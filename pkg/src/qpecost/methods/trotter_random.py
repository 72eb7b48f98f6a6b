"""Randomized product-formula estimators (qDRIFT and second-order Trotter).

Both simulate exponentials of single Hamiltonian terms drawn at random; the
exponential count follows from the target energy accuracy and the total
failure probability, and each exponential costs one controlled z-rotation
decomposed into two plain rotations.
"""
import math

from ..errors import ErrorAllocation
from ..molecule import MolecularParams
from ..primitives import rotation_synthesis_cost
from .breakdown import CostBreakdown


def _exponential_total(method: str, n: int, eps_s: float) -> CostBreakdown:
    eps_ss = min(eps_s / (2 * n), 0.5)
    per_exp = 2 * rotation_synthesis_cost(eps_ss, "rz")
    total = n * per_exp
    return CostBreakdown(method=method, total=total,
                         subtotals={"rotations": total}, r=n,
                         n_rotations=2 * n, eps_ss=eps_ss)


def qdrift_cost(params: MolecularParams, alloc: ErrorAllocation,
                cfg) -> CostBreakdown:
    """T-count of phase estimation driven by the qDRIFT channel."""
    lam = params.lambda_value
    if lam == 0:
        return CostBreakdown(method="qdrift", total=0,
                             subtotals={"rotations": 0}, r=1)
    p_fail = cfg.qpe_failure_prob + 2 * alloc.eps_hs
    if p_fail <= 0:
        raise ValueError(f"total failure probability must be > 0, got {p_fail}")
    n = math.ceil(133 * lam ** 2 / (alloc.eps_pea ** 2 * p_fail ** 3))
    return _exponential_total("qdrift", n, alloc.eps_s)


def rand_hamiltonian_cost(params: MolecularParams, alloc: ErrorAllocation,
                          cfg) -> CostBreakdown:
    """T-count of phase estimation with second-order random Trotter steps."""
    p_fail = cfg.qpe_failure_prob + 2 * alloc.eps_hs
    if p_fail <= 0:
        raise ValueError(f"total failure probability must be > 0, got {p_fail}")
    n = math.ceil(69 * params.Gamma ** 2 * params.Lambda_max ** 1.5
                  / (alloc.eps_pea ** 1.5 * p_fail ** 2))
    return _exponential_total("rand_hamiltonian", n, alloc.eps_s)
