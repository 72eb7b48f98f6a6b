"""Truncated-Taylor-series estimators in a Gaussian basis.

The database variant loads precomputed coefficients through an arbitrary
state preparation; the on-the-fly variant instead evaluates the Hamiltonian
integrands inside the circuit with fixed-point arithmetic, trading the big
state preparation for heavy arithmetic.
"""
import math

from ..errors import ErrorAllocation
from ..molecule import MolecularParams
from ..primitives import (add_cost, arbitrary_state_synthesis_rotations,
                          mult_cost, rotation_synthesis_cost)
from . import _common
from .breakdown import CostBreakdown


def taylor_naive_cost(params: MolecularParams, alloc: ErrorAllocation,
                      cfg) -> CostBreakdown:
    """Database Taylorization: coefficients loaded by state synthesis."""
    N = params.N
    r = _common.segment_count(params.lambda_value, alloc.eps_pea)
    K = _common.truncation_order(r, alloc.eps_hs)
    prep_rots = arbitrary_state_synthesis_rotations(
        math.ceil(math.log2(N ** 4)))
    n_rot = r * 3 * (2 * (K - 1) + 2 * K * prep_rots)
    eps_ss = min(alloc.eps_s / n_rot, 0.5)
    prep_w = prep_rots * rotation_synthesis_cost(eps_ss, "su2")
    total, stages = _common.taylor_segment_total(
        r, K, prep_w, _common.select_gauss_cost(N), eps_ss)
    return CostBreakdown(method="taylor_naive", total=total, subtotals=stages,
                         r=r, K=K, n_rotations=n_rot, eps_ss=eps_ss,
                         constants={"prep_rotations": prep_rots})


def _sample_w_cost(params: MolecularParams, order: int, n: int) -> int:
    """Coefficient evaluation over the two-body, kinetic and nuclear terms."""
    N, d = params.N, params.basis_contraction_d
    J = params.J
    q = N * _common.orbital_eval_cost(order, n, d)
    q_delta = N * _common.orbital_eval_laplacian_cost(order, n, d)
    r_op = _common.radial_projection_cost(order, n)
    xi = 3 * add_cost(n)
    two_body = 4 * q + r_op + 4 * mult_cost(n) + xi
    kinetic = q + q_delta + mult_cost(n)
    external = (2 * q + J * r_op + J * mult_cost(n)
                + max(0, J - 1) * add_cost(n) + J * xi)
    return two_body + kinetic + external


def taylor_on_the_fly_cost(params: MolecularParams, alloc: ErrorAllocation,
                           cfg) -> CostBreakdown:
    """On-the-fly Taylorization: integrands evaluated inside the circuit."""
    N = params.N
    phi, phip = params.phi_max, params.phi_prime_max
    t = 4.7 / alloc.eps_pea
    x_max = params.x_max or math.log(N * t / alloc.eps_h)
    lam_prime = params.Gamma * 64 * phi ** 4 * x_max ** 5
    r = _common.segment_count(lam_prime, alloc.eps_pea)
    K = _common.truncation_order(r, alloc.eps_hs)
    mu = ((2 * r * 6 * K / alloc.eps_h) * (4 * phip + phi / x_max)
          * phi ** 3 * x_max ** 6) ** 6
    n = _common.register_bits(mu)
    order = cfg.taylor_order(alloc.eps_tay)
    n_rot = r * 3 * (2 * (K - 1) + 2 * K * 2)
    eps_ss = min(alloc.eps_s / n_rot, 0.5)
    sample = _sample_w_cost(params, order, n)
    prep_w = 2 * sample + _common.kickback_cost(n, eps_ss)
    total, stages = _common.taylor_segment_total(
        r, K, prep_w, _common.select_gauss_cost(N), eps_ss)
    big_m = 6 * K * r * params.Gamma * 64 * phi ** 4 * x_max ** 5 / alloc.eps_h
    zeta = alloc.eps_h / (params.Gamma * (2 * x_max) ** 6 * t)
    return CostBreakdown(method="taylor_on_the_fly", total=total,
                         subtotals=stages, r=r, K=K, M=big_m, mu=mu,
                         zeta=zeta, M0_bits=n, n_rotations=n_rot,
                         eps_ss=eps_ss,
                         constants={"taylor_order": order, "x_max": x_max})
