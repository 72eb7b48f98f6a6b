"""Qubitized-walk estimator with unary-iterator lookups (linear-in-N step).

Phase estimation acts on the arccos walk, so there is no series truncation;
the step cost is two coefficient preparations, one Select and a reflection,
and the segment count carries the arccos inflation factor.
"""
import math

from ..errors import ErrorAllocation
from ..molecule import MolecularParams, plane_wave_lambda
from ..primitives import multi_controlled_not_cost
from . import _common
from .breakdown import CostBreakdown
from .plane_wave import _coefficient_bits


def linear_t_cost(params: MolecularParams, alloc: ErrorAllocation,
                  cfg) -> CostBreakdown:
    params.require(["Omega"], "linear_t")
    N = params.N
    lam = plane_wave_lambda(params)
    r = _common.segment_count(lam, alloc.eps_pea, cfg.arccos_walk_multiplier)
    mu = _coefficient_bits(lam, alloc.eps_pea, params.H_norm_bound)
    logn = math.ceil(math.log2(N))
    n_rot = r * 12
    eps_ss = min(alloc.eps_s / n_rot, 0.5)
    eps_bits = math.ceil(math.log2(1 / eps_ss))
    subprepare = 6 * N + 12 * logn + 10 * mu + 16 * eps_bits
    prepare = (subprepare + 8 * logn + 8 * eps_bits + 4 * (logn - 1)
               + 2 * 16 * logn + 4 * max(1, logn - 1))
    select = 12 * N + 8 * logn - 14
    reflection = multi_controlled_not_cost(mu + 2 * logn + 3)
    total = r * (2 * prepare + select + reflection)
    return CostBreakdown(
        method="linear_t", total=total,
        subtotals={"prepare": r * 2 * prepare, "select": r * select,
                   "reflection": r * reflection},
        r=r, mu=mu, n_rotations=n_rot, eps_ss=eps_ss,
        constants={"lambda_pw": lam,
                   "walk_multiplier": cfg.arccos_walk_multiplier})
