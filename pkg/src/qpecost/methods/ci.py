"""First-quantized Configuration Interaction estimator.

The sparse CI matrix is decomposed into 1-sparse self-inverse pieces; the
segment count follows from the decomposition one-norm, which external lemma
bounds tie to the per-integral accuracy. Those bounds live in the cited
construction, so the one-norm model here is a documented stand-in built from
the same orbital-extent constants; the result is upper-bound quality, which
matches how the published figures for this method are described.
"""
import math

from ..errors import ErrorAllocation
from ..molecule import MolecularParams, ci_gamma
from ..primitives import (add_cost, compare_cost, mult_cost,
                          multi_controlled_not_cost, rotation_synthesis_cost)
from . import _common
from .breakdown import CostBreakdown


class SelfConsistencyError(RuntimeError):
    """Segment-count iteration failed to settle; carries the last iterate."""

    def __init__(self, message, last_r, last_k):
        super().__init__(message)
        self.last_r = last_r
        self.last_k = last_k


def _qval_cost(params: MolecularParams, order: int, n: int) -> int:
    """Integral evaluations behind the matrix-element oracle, all cases."""
    N, eta = params.N, params.eta
    d = params.basis_contraction_d
    J = params.J or 1
    q = N * _common.orbital_eval_cost(order, n, d)
    q_delta = N * _common.orbital_eval_laplacian_cost(order, n, d)
    r_op = _common.radial_projection_cost(order, n)
    xi = 3 * add_cost(n)
    one_body = ((q + q_delta + mult_cost(n))
                + (2 * q + J * r_op + J * mult_cost(n)
                   + max(0, J - 1) * add_cost(n) + J * xi))
    two_body = 4 * q + r_op + 4 * mult_cost(n) + xi
    pair = 2 * two_body + add_cost(n)
    return (eta * one_body
            + (eta * (eta - 1) // 2) * pair
            + (N - 1) * eta * (eta - 1) * pair
            + (N - 1) * eta * one_body
            + ((N - 1) ** 2) * (eta * (eta - 1) // 2) * pair)


def _qcol_cost(params: MolecularParams) -> int:
    """Column oracle: two passes of the single-misplaced-item sorter plus
    the index-repair arithmetic."""
    N, eta = params.N, params.eta
    n_idx = max(1, math.ceil(math.log2(N)))
    lg = max(1, math.ceil(math.log2(eta)))
    n_comp = eta * lg * (lg - 1) // 4
    sort_pass = (2 * n_comp * (2 * compare_cost(n_idx) + 4 * n_idx)
                 + 2 * add_cost(n_idx))
    find_alphas = eta * (add_cost(n_idx) + 2 * compare_cost(n_idx))
    find_gammas = find_alphas + 2 * mult_cost(n_idx)
    return 2 * sort_pass + find_alphas + find_gammas


def configuration_interaction_cost(params: MolecularParams,
                                   alloc: ErrorAllocation,
                                   cfg) -> CostBreakdown:
    """T-count of Taylorized evolution on the 1-sparse CI decomposition."""
    N, eta = params.N, params.eta
    phi = params.phi_max
    g1, g2 = params.gamma1_ci, params.gamma2_ci
    gamma_ci = ci_gamma(eta, N)
    t = 4.7 / alloc.eps_pea
    x = math.log(N * t / alloc.eps_h) / params.alpha_ci
    c_norm = 64 * phi ** 4 * x ** 5

    K, r = 1, 1
    converged = False
    for _ in range(cfg.ci_iteration_cap):
        delta = alloc.eps_h / (6 * K * gamma_ci * t)
        mu_m_zeta = c_norm / delta
        r_new = max(1, math.ceil(2 * gamma_ci * t * mu_m_zeta / _common.LN2))
        k_new = _common.truncation_order(r_new, alloc.eps_hs)
        if k_new == K and abs(r_new - r) <= cfg.ci_rel_tol * r:
            r = r_new
            converged = True
            break
        r, K = r_new, k_new
    if not converged:
        raise SelfConsistencyError(
            f"segment count did not settle within {cfg.ci_iteration_cap} "
            f"iterations (last r={r}, K={K})", r, K)

    delta = alloc.eps_h / (6 * K * gamma_ci * t)
    mu = ((1 / delta) * (4 * g1 + 1 + g2) * phi ** 4 * x ** 5) ** 6
    n = _common.register_bits(mu)
    order = cfg.taylor_order(alloc.eps_tay)
    q_val = _qval_cost(params, order, n)
    q_col = _qcol_cost(params)

    n_rot = r * 3 * (2 * K * 2 + 2 * 2)
    eps_ss = min(alloc.eps_s / n_rot, 0.5)
    c_ry = rotation_synthesis_cost(eps_ss, "rz", "single")
    kick = _common.kickback_cost(n, eps_ss)

    rotations = 3 * r * 2 * K * c_ry
    oracles = 3 * r * K * (q_col + 2 * q_val + kick)
    adaptation = r * 2 * multi_controlled_not_cost(math.ceil(K / 2) + 1)
    total = rotations + oracles + adaptation
    zeta = delta / (gamma_ci * mu)
    return CostBreakdown(
        method="configuration_interaction", total=total,
        subtotals={"rotations": rotations, "select": oracles,
                   "walk_overhead": adaptation},
        r=r, K=K, M=mu_m_zeta / (mu * zeta) if mu * zeta else None, mu=mu,
        zeta=zeta, M0_bits=n, n_rotations=n_rot, eps_ss=eps_ss,
        constants={"gamma_ci": gamma_ci, "delta": delta, "x_eff": x,
                   "taylor_order": order})
