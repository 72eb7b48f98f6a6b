"""Plane/dual-wave basis estimators: split-operator Trotter and the two
Taylorization variants with table-lookup state preparation.

All three expect `params.N` to already hold the plane-wave spin-orbital
count (the pipeline rescales the Gaussian count before calling in).
"""
import math

from ..errors import ErrorAllocation
from ..molecule import (MolecularParams, lambda_prime_on_the_fly, norm_bounds,
                        plane_wave_lambda)
from ..primitives import (add_cost, div_cost, fermionic_fft_cost,
                          fermionic_fft_rotations, mult_cost,
                          rotation_synthesis_cost, taylor_series_eval_cost)
from . import _common
from .breakdown import CostBreakdown


def _next_pow2(n: int) -> int:
    return 1 << max(1, math.ceil(math.log2(n)))


def low_depth_trotter_cost(params: MolecularParams, alloc: ErrorAllocation,
                           cfg) -> CostBreakdown:
    """Second-order split-operator steps between dual and primal bases."""
    params.require(["Omega"], "low_depth_trotter")
    N = params.N
    max_t, max_u, max_v = norm_bounds(params)
    max_uv = max_u + max_v
    t = 4.7 / alloc.eps_pea
    commutator = 2 * (max_t ** 2 * max_uv + max_t * max_uv ** 2)
    r = max(1, math.ceil(t ** 1.5 * math.sqrt(commutator / alloc.eps_hs)))
    nf = _next_pow2(N)
    n_v = 8 * N * (8 * N - 1) // 2
    n_rot = r * (2 * fermionic_fft_rotations(nf) + 16 * N + 2 * n_v)
    eps_ss = min(alloc.eps_s / n_rot, 0.5)
    ffft = 2 * fermionic_fft_cost(nf, eps_ss)
    diag = 16 * N * rotation_synthesis_cost(eps_ss, "rz")
    coupled = n_v * rotation_synthesis_cost(eps_ss, "rz", "single")
    total = r * (ffft + diag + coupled)
    return CostBreakdown(
        method="low_depth_trotter", total=total,
        subtotals={"rotations": r * (diag + coupled), "prepare": r * ffft},
        r=r, n_rotations=n_rot, eps_ss=eps_ss,
        constants={"max_T": max_t, "max_UV": max_uv})


def _coefficient_bits(lam: float, delta_e: float, norm_bound: float | None) -> int:
    """Precision register size for coefficient alias sampling."""
    if delta_e >= lam:
        raise ValueError(
            f"accuracy target {delta_e} must lie below the one-norm {lam}")
    ratio = min(norm_bound / lam, 0.875) if norm_bound else 0.5
    return math.ceil(math.log2(2 * math.sqrt(2) * lam / delta_e)
                     + math.log2(1 + delta_e ** 2 / (8 * lam ** 2))
                     - math.log2(1 - ratio))


def low_depth_taylor_naive_cost(params: MolecularParams,
                                alloc: ErrorAllocation, cfg) -> CostBreakdown:
    """Taylorization with lookup-based coefficient preparation."""
    params.require(["Omega"], "low_depth_taylor_naive")
    N = params.N
    lam = plane_wave_lambda(params)
    r = _common.segment_count(lam, alloc.eps_pea)
    K = _common.truncation_order(r, alloc.eps_hs)
    mu = _coefficient_bits(lam, alloc.eps_pea, params.H_norm_bound)
    logn = math.ceil(math.log2(N))
    n_rot = r * 3 * (2 * (K - 1) + 2 * K * 4)
    eps_ss = min(alloc.eps_s / n_rot, 0.5)
    prep_w = (6 * N + 40 * logn
              + 16 * math.ceil(math.log2(1 / eps_ss)) + 10 * mu)
    select = 12 * N + 8 * logn
    total, stages = _common.taylor_segment_total(r, K, prep_w, select, eps_ss)
    return CostBreakdown(
        method="low_depth_taylor_naive", total=total, subtotals=stages,
        r=r, K=K, mu=mu, n_rotations=n_rot, eps_ss=eps_ss,
        constants={"lambda_pw": lam})


def diagonal_case_cost(J: int, order: int, N: int) -> int:
    """Closed-form T-count of evaluating one diagonal coefficient."""
    log_n = math.log2(N)
    value = J * (35 * order / 2 + 63 + 2 * order / log_n) * log_n ** 2
    return math.ceil(round(value, 6))


def low_depth_taylor_on_the_fly_cost(params: MolecularParams,
                                     alloc: ErrorAllocation,
                                     cfg) -> CostBreakdown:
    """Taylorization with in-circuit coefficient evaluation."""
    params.require(["Omega"], "low_depth_taylor_on_the_fly")
    N = params.N
    J = params.J or 0
    lam_prime = lambda_prime_on_the_fly(params)
    r = _common.segment_count(lam_prime, alloc.eps_pea)
    K = _common.truncation_order(r, alloc.eps_hs)
    order = cfg.taylor_order(alloc.eps_tay)
    n = max(1, math.ceil(math.log2(N)))
    diagonal = diagonal_case_cost(J, order, N)
    off_diagonal = (3 * mult_cost(n) + 3 * add_cost(n)
                    + 3 * mult_cost(n) + 2 * add_cost(n)
                    + taylor_series_eval_cost(order, n, "cosine_cordic")
                    + mult_cost(n) + div_cost(n))
    kinetic_case = 2 * mult_cost(n)
    sample = diagonal + off_diagonal + kinetic_case
    n_rot = r * 3 * (2 * (K - 1) + 2 * K * 2)
    eps_ss = min(alloc.eps_s / n_rot, 0.5)
    prep_w = 2 * sample + _common.kickback_cost(n, eps_ss)
    select = 12 * N + 8 * math.ceil(math.log2(N))
    total, stages = _common.taylor_segment_total(r, K, prep_w, select, eps_ss)
    gamma_pw = 2 * (8 * N) ** 2
    zeta = alloc.eps_h / (gamma_pw * r)
    big_m = (lam_prime / (2 * (8 * N) ** 3)) / zeta
    return CostBreakdown(
        method="low_depth_taylor_on_the_fly", total=total, subtotals=stages,
        r=r, K=K, M=big_m, zeta=zeta, M0_bits=n, n_rotations=n_rot,
        eps_ss=eps_ss,
        constants={"lambda_prime": lam_prime, "taylor_order": order})
