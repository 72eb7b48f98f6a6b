"""Qubitized walk over the rank-factorized two-body tensor with
ancilla-trading lookups (works in any orbital basis).
"""
import math

from ..errors import ErrorAllocation
from ..molecule import MolecularParams
from ..primitives import (compare_cost, multi_controlled_not_cost, qrom_cost,
                          qroam_cost, qroam_optimal_k, rotation_synthesis_cost,
                          uniform_superposition_cost)
from . import _common
from .breakdown import CostBreakdown


def sparsity_low_rank_cost(params: MolecularParams, alloc: ErrorAllocation,
                           cfg) -> CostBreakdown:
    params.require(["L_rank"], "sparsity_low_rank")
    N, lam, L = params.N, params.lambda_value, params.L_rank
    if L < 1:
        raise ValueError(f"factorization rank must be >= 1, got {L}")
    r = _common.segment_count(lam, alloc.eps_pea, cfg.arccos_walk_multiplier)
    mu = math.ceil(math.log2(2 * math.sqrt(2) * lam / alloc.eps_pea))
    m_out = math.ceil(math.log2(N ** 2)) + mu
    d = (2 * L + 1) * (N * N // 8 + N // 4)
    k_c = qroam_optimal_k(d, m_out, "compute")
    k_u = qroam_optimal_k(d, m_out, "uncompute")
    qroam_tof = qroam_cost(d, m_out, k_c)[0] + qroam_cost(d, m_out, k_u)[1]

    logn = max(1, math.ceil(math.log2(N)))
    logn2 = max(1, math.ceil(math.log2(N / 2)))
    log_l = max(1, math.ceil(math.log2(L + 1)))
    n_rot = r * (2 * (6 * 2 + 3) + 2)
    eps_ss = min(alloc.eps_s / n_rot, 0.5)

    select_tof = 4 * N + 4 * logn
    index_tof = 2 * logn2 ** 2
    cswap_tof = mu + log_l + 4 * logn2
    pair_t = (6 * uniform_superposition_cost(max(2, N // 2), eps_ss)
              + 3 * rotation_synthesis_cost(eps_ss, "su2")
              + 3 * compare_cost(logn2)
              + 2 * multi_controlled_not_cost(logn2 + 1))
    l_prep = (uniform_superposition_cost(L + 1, eps_ss) + qrom_cost(L + 1)
              + multi_controlled_not_cost(log_l + 1))

    toffoli_part = qroam_tof + select_tof + 2 * index_tof + cswap_tof + mu
    step = 4 * toffoli_part + 2 * pair_t + l_prep
    total = r * step
    return CostBreakdown(
        method="sparsity_low_rank", total=total,
        subtotals={"prepare": r * (4 * (qroam_tof + cswap_tof + mu)
                                   + 2 * pair_t + l_prep),
                   "select": r * 4 * select_tof,
                   "arithmetic": r * 4 * 2 * index_tof},
        r=r, mu=mu, M=m_out, n_rotations=n_rot, eps_ss=eps_ss,
        constants={"d": d, "k_compute": k_c, "k_uncompute": k_u,
                   "walk_multiplier": cfg.arccos_walk_multiplier})
