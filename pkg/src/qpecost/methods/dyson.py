"""Interaction-picture estimator: truncated Dyson series with the kinetic
term as the simulated piece and the diagonal potential fast-forwarded.
"""
import math

from ..errors import ErrorAllocation
from ..molecule import MolecularParams, norm_bounds
from ..primitives import (add_cost, arbitrary_state_synthesis_rotations,
                          compare_cost, fermionic_fft_cost,
                          fermionic_fft_rotations, mult_cost, qrom_cost,
                          rotation_synthesis_cost,
                          uniform_superposition_cost)
from . import _common
from .breakdown import CostBreakdown
from .plane_wave import _next_pow2


def interaction_picture_cost(params: MolecularParams, alloc: ErrorAllocation,
                             cfg) -> CostBreakdown:
    N, eta = params.N, params.eta
    if params.norm_T:
        norm_t = params.norm_T
        norm_uv = (params.norm_U or 0.0) + (params.norm_V or 0.0)
    else:
        params.require(["Omega"], "interaction_picture")
        norm_t, max_u, max_v = norm_bounds(params)
        norm_uv = max_u + max_v
    if norm_t <= 0:
        raise ValueError("kinetic-norm bound must be positive")
    t = 4.7 / alloc.eps_pea
    r = max(1, math.ceil(4.7 * norm_t / (alloc.eps_pea * _common.LN2)))
    K = _common.truncation_order(r, alloc.eps_hs)
    big_m = math.ceil(max(
        16 * t * _common.LN2 * (2 * norm_uv + norm_t) / alloc.eps_hs, K ** 2))
    log_m = math.ceil(math.log2(big_m))
    nb = max(1, math.ceil(math.log2(K + 1)))
    nf = _next_pow2(N)
    coef_rots = arbitrary_state_synthesis_rotations(nb)
    b_occ = max(1, math.ceil(math.log2(eta + 1)))
    b_ar = cfg.arith_bits
    mu_t = math.ceil(math.log2(2 * math.sqrt(2) * norm_t / alloc.eps_pea))

    n_rot_seg = (2 * coef_rots
                 + K * (2 * log_m * (fermionic_fft_rotations(nf) + N)
                        + 2 * fermionic_fft_rotations(nf) + 2))
    n_rot = r * 3 * n_rot_seg
    eps_ss = min(alloc.eps_s / n_rot, 0.5)

    coef = coef_rots * rotation_synthesis_cost(eps_ss, "su2")
    ffft = fermionic_fft_cost(nf, eps_ss)
    phase_op = ((N // 2) * add_cost(b_occ) + ffft
                + (N // 2) * (2 * mult_cost(b_ar) + add_cost(b_ar))
                + (N // 2) * mult_cost(b_ar)
                + N * rotation_synthesis_cost(eps_ss, "rz"))
    prep_t = qrom_cost(N) + 8 * mu_t + 4 * math.ceil(math.log2(N))
    o_t = (2 * ffft + prep_t + 4 * N
           + uniform_superposition_cost(big_m, eps_ss) + compare_cost(log_m))
    ham_t = 2 * log_m * phase_op + o_t

    coef_total = r * 3 * 2 * coef
    dyson_total = r * 3 * K * ham_t
    total = coef_total + dyson_total
    return CostBreakdown(
        method="interaction_picture", total=total,
        subtotals={"prepare": coef_total, "select": dyson_total},
        r=r, K=K, M=big_m, mu=mu_t, M0_bits=nb, n_rotations=n_rot,
        eps_ss=eps_ss,
        constants={"norm_T": norm_t, "norm_UV": norm_uv, "log_M": log_m})
