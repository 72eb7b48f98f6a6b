"""Estimator behaviour: transcription parity with the straight-line
reference scripts, worked single values, error-coordinate monotonicity and
size-scaling probes.
"""
import dataclasses
import math

import numpy as np
import pytest

from qpecost import MolecularParams, get_method, method_names
from qpecost.config import CostModelConfig
from qpecost.errors import METHOD_ERROR_SOURCES, ErrorAllocation
from qpecost.methods.ci import _qcol_cost
from qpecost.methods.plane_wave import _coefficient_bits, diagonal_case_cost
from qpecost.methods._common import truncation_order

from reference_formulas import REFERENCES


def synthetic_params(rng, method):
    """Random but physically ordered parameter sets a method accepts."""
    eta = int(rng.integers(2, 12))
    n_gauss = eta + int(rng.integers(2, 30))
    big_lambda = float(rng.uniform(0.1, 5.0))
    lam = big_lambda * (1 + float(rng.uniform(0.0, 50.0)))
    params = MolecularParams(
        name="synthetic", basis="test",
        N=n_gauss, eta=eta,
        lambda_value=lam, Lambda_max=big_lambda,
        Gamma=int(rng.integers(10, 10 ** 5)),
        J=int(rng.integers(1, 5)),
        Omega=float(rng.uniform(0.5, 200.0)),
        x_max=float(rng.uniform(5.0, 25.0)) if rng.random() < 0.5 else None,
        phi_max=float(rng.uniform(0.2, 1.5)),
        phi_prime_max=float(rng.uniform(0.2, 2.5)),
        alpha_ci=float(rng.uniform(0.5, 4.0)),
        gamma1_ci=float(rng.uniform(0.5, 3.0)),
        gamma2_ci=float(rng.uniform(0.5, 5.0)),
        L_rank=int(rng.integers(1, max(2, n_gauss ** 2 // 4))),
        H_norm_bound=0.5 * lam)
    if get_method(method).needs_plane_waves:
        params = params.with_plane_wave_count(
            int(rng.integers(64, 1200)))
    return params


def random_allocation(rng, method):
    sources = METHOD_ERROR_SOURCES[method]
    weights = rng.dirichlet(np.ones(len(sources)))
    values = dict.fromkeys(
        ("eps_pea", "eps_hs", "eps_h", "eps_s", "eps_tay"), 0.0)
    for name, w in zip(sources, weights):
        values[name] = float(w) * 0.0015
    return ErrorAllocation(**values)


def config_dict(cfg):
    return {"arith_bits": cfg.arith_bits,
            "qpe_failure_prob": cfg.qpe_failure_prob,
            "arccos_walk_multiplier": cfg.arccos_walk_multiplier,
            "taylor_argument_bound": cfg.taylor_argument_bound,
            "ci_iteration_cap": cfg.ci_iteration_cap,
            "ci_rel_tol": cfg.ci_rel_tol}


class TestTranscriptionParity:
    """The package must agree exactly with the independent references."""

    @pytest.mark.parametrize("method", sorted(REFERENCES))
    def test_five_synthetic_sets(self, method):
        cfg = CostModelConfig()
        rng = np.random.default_rng(20240200 + hash(method) % 1000)
        checked = 0
        while checked < 5:
            params = synthetic_params(rng, method)
            alloc = random_allocation(rng, method)
            expected = REFERENCES[method](
                params.to_dict(), dataclasses.asdict(alloc), config_dict(cfg))
            got = get_method(method).cost_fn(params, alloc, cfg)
            assert got.total == expected, (
                f"{method}: package {got.total} != reference {expected}")
            checked += 1


class TestWorkedValues:
    def test_qdrift_exponential_count(self):
        params = MolecularParams(name="s", basis="t", N=4, eta=2,
                                 lambda_value=1.0, Lambda_max=1.0, Gamma=1)
        alloc = ErrorAllocation(eps_pea=1e-3, eps_hs=0.0, eps_s=1e-4)
        bd = get_method("qdrift").cost_fn(params, alloc, CostModelConfig())
        assert bd.r == 133 * 10 ** 12

    def test_qdrift_empty_hamiltonian(self):
        params = MolecularParams(name="s", basis="t", N=4, eta=2,
                                 lambda_value=1.0, Lambda_max=1.0, Gamma=1)
        object.__setattr__(params, "lambda_value", 0.0)
        alloc = ErrorAllocation(eps_pea=1e-3, eps_hs=1e-4, eps_s=1e-4)
        bd = get_method("qdrift").cost_fn(params, alloc, CostModelConfig())
        assert bd.total == 0

    def test_rand_hamiltonian_unit_inputs(self):
        params = MolecularParams(name="s", basis="t", N=4, eta=2,
                                 lambda_value=1.0, Lambda_max=1.0, Gamma=1)
        alloc = ErrorAllocation(eps_pea=1.0, eps_hs=0.0, eps_s=1e-4)
        cfg = CostModelConfig(qpe_failure_prob=1.0)
        bd = get_method("rand_hamiltonian").cost_fn(params, alloc, cfg)
        assert bd.r == 69

    def test_truncation_order_worked_value(self):
        assert truncation_order(10 ** 4, 1e-3) == 11

    def test_truncation_rejects_degenerate_edge(self):
        params = MolecularParams(name="s", basis="t", N=4, eta=2,
                                 lambda_value=1e-9, Lambda_max=1e-9, Gamma=1)
        alloc = ErrorAllocation(eps_pea=4.7, eps_hs=2.0, eps_s=1e-4)
        with pytest.raises(ValueError, match="degenerate"):
            get_method("taylor_naive").cost_fn(params, alloc,
                                               CostModelConfig())

    def test_linear_t_select_and_mu(self):
        params = MolecularParams(name="s", basis="t", N=16, eta=2,
                                 lambda_value=5.0, Lambda_max=1.0, Gamma=10,
                                 Omega=1.0, H_norm_bound=2.5)
        alloc = ErrorAllocation(eps_pea=7.5e-4, eps_s=7.5e-4)
        bd = get_method("linear_t").cost_fn(params, alloc, CostModelConfig())
        assert bd.subtotals["select"] == bd.r * (12 * 16 + 8 * 4 - 14)
        assert bd.subtotals["select"] // bd.r == 210

    def test_coefficient_bits_leading_term(self):
        assert math.ceil(math.log2(2 * math.sqrt(2) * 10 / 0.0015)) == 15
        assert _coefficient_bits(10.0, 0.0015, None) == 16

    def test_coefficient_bits_rejects_accuracy_above_norm(self):
        with pytest.raises(ValueError):
            _coefficient_bits(1.0, 2.0, None)

    def test_low_depth_taylor_naive_stage_wiring(self):
        params = MolecularParams(name="s", basis="t", N=8, eta=2,
                                 lambda_value=1.0, Lambda_max=0.5, Gamma=10,
                                 Omega=1.0).with_plane_wave_count(800)
        alloc = ErrorAllocation(eps_pea=5e-4, eps_hs=5e-4, eps_s=5e-4)
        bd = get_method("low_depth_taylor_naive").cost_fn(
            params, alloc, CostModelConfig())
        logn = math.ceil(math.log2(800))
        eps_bits = math.ceil(math.log2(1 / bd.eps_ss))
        prep_w = 6 * 800 + 40 * logn + 16 * eps_bits + 10 * int(bd.mu)
        assert bd.subtotals["prepare"] == 3 * bd.r * 2 * bd.K * prep_w
        assert bd.subtotals["select"] == 3 * bd.r * bd.K * (12 * 800 + 8 * logn)

    def test_diagonal_case_closed_form(self):
        assert diagonal_case_cost(2, 4, 1024) == 26760
        assert diagonal_case_cost(0, 4, 1024) == 0

    def test_sparsity_lookup_volume(self):
        params = MolecularParams(name="s", basis="t", N=100, eta=20,
                                 lambda_value=50.0, Lambda_max=5.0,
                                 Gamma=10 ** 4, L_rank=200)
        alloc = ErrorAllocation(eps_pea=1e-3, eps_s=5e-4)
        bd = get_method("sparsity_low_rank").cost_fn(params, alloc,
                                                     CostModelConfig())
        assert bd.constants["d"] == 401 * (1250 + 25) == 511275

    def test_sparsity_rejects_missing_rank(self):
        params = MolecularParams(name="s", basis="t", N=100, eta=20,
                                 lambda_value=50.0, Lambda_max=5.0,
                                 Gamma=10 ** 4)
        alloc = ErrorAllocation(eps_pea=1e-3, eps_s=5e-4)
        with pytest.raises(Exception, match="L_rank"):
            params.require(["L_rank"], "sparsity_low_rank")
            get_method("sparsity_low_rank").cost_fn(params, alloc,
                                                    CostModelConfig())

    def test_interaction_picture_segments(self):
        params = MolecularParams(name="s", basis="t", N=64, eta=4,
                                 lambda_value=20.0, Lambda_max=1.0,
                                 Gamma=100, Omega=1.0, norm_T=10.0,
                                 norm_U=2.0, norm_V=1.0)
        alloc = ErrorAllocation(eps_pea=0.0015, eps_hs=1e-4, eps_s=1e-4)
        bd = get_method("interaction_picture").cost_fn(params, alloc,
                                                       CostModelConfig())
        assert bd.r == math.ceil(4.7 * 10 / (0.0015 * math.log(2)))
        assert bd.r == 45205

    def test_ci_sorting_network_count(self):
        params = MolecularParams(name="s", basis="t", N=16, eta=4,
                                 lambda_value=1.0, Lambda_max=0.5, Gamma=10)
        n_idx = 4
        n_comp = 4 * 2 * (2 - 1) // 4
        assert n_comp == 2
        expected = (2 * (2 * n_comp * (2 * 8 * n_idx + 4 * n_idx)
                         + 2 * 4 * n_idx)
                    + 4 * (4 * n_idx + 2 * 8 * n_idx)
                    + (4 * (4 * n_idx + 2 * 8 * n_idx) + 2 * 21 * n_idx ** 2))
        assert _qcol_cost(params) == expected

    def test_ci_small_system_gamma_feeds_r(self):
        params = MolecularParams(name="s", basis="t", N=3, eta=2,
                                 lambda_value=1.0, Lambda_max=0.5, Gamma=10,
                                 J=1, phi_max=0.7, phi_prime_max=0.9,
                                 alpha_ci=1.0, gamma1_ci=1.0, gamma2_ci=1.0)
        alloc = ErrorAllocation(eps_pea=3e-4, eps_hs=3e-4, eps_h=3e-4,
                                eps_s=3e-4, eps_tay=3e-4)
        bd = get_method("configuration_interaction").cost_fn(
            params, alloc, CostModelConfig())
        assert bd.constants["gamma_ci"] == 3

    def test_low_depth_trotter_term_counts(self):
        # 8N diagonal terms each for the kinetic and external parts plus
        # 8N(8N-1)/2 coupled terms; at N=2 that is 16, 16 and 120
        assert 8 * 2 == 16 and 8 * 2 * (8 * 2 - 1) // 2 == 120
        params = MolecularParams(name="s", basis="t", N=8, eta=2,
                                 lambda_value=1.0, Lambda_max=0.5, Gamma=10,
                                 Omega=1.0)
        alloc = ErrorAllocation(eps_pea=5e-4, eps_hs=5e-4, eps_s=5e-4)
        bd = get_method("low_depth_trotter").cost_fn(params, alloc,
                                                     CostModelConfig())
        from qpecost.primitives import fermionic_fft_rotations
        n_v = 8 * 8 * (8 * 8 - 1) // 2
        assert bd.n_rotations == bd.r * (
            2 * fermionic_fft_rotations(8) + 16 * 8 + 2 * n_v)

    def test_interaction_picture_missing_norms_rejected(self):
        params = MolecularParams(name="s", basis="t", N=64, eta=4,
                                 lambda_value=20.0, Lambda_max=1.0,
                                 Gamma=100)
        alloc = ErrorAllocation(eps_pea=0.0015, eps_hs=1e-4, eps_s=1e-4)
        with pytest.raises(Exception, match="Omega"):
            get_method("interaction_picture").cost_fn(params, alloc,
                                                      CostModelConfig())

    def test_degenerate_rank_rejected_at_load(self):
        from qpecost.molecule import SchemaError
        with pytest.raises(SchemaError, match="L_rank"):
            MolecularParams(name="s", basis="t", N=100, eta=20,
                            lambda_value=50.0, Lambda_max=5.0,
                            Gamma=10 ** 4, L_rank=0)

    def test_low_depth_trotter_minimum_one_segment(self):
        params = MolecularParams(name="s", basis="t", N=8, eta=2,
                                 lambda_value=1.0, Lambda_max=0.5, Gamma=10,
                                 Omega=1e12).with_plane_wave_count(64)
        alloc = ErrorAllocation(eps_pea=1e-3, eps_hs=0.00049, eps_s=1e-5)
        bd = get_method("low_depth_trotter").cost_fn(params, alloc,
                                                     CostModelConfig())
        assert bd.r >= 1


class TestBreakdownInvariants:
    @pytest.mark.parametrize("method", sorted(METHOD_ERROR_SOURCES))
    def test_totals_and_constants(self, method):
        cfg = CostModelConfig()
        rng = np.random.default_rng(7)
        for _ in range(3):
            params = synthetic_params(rng, method)
            alloc = random_allocation(rng, method)
            bd = get_method(method).cost_fn(params, alloc, cfg)
            assert bd.total == sum(bd.subtotals.values())
            assert bd.r >= 1
            if bd.K is not None:
                assert bd.K >= 1
            assert all(v >= 0 for v in bd.subtotals.values())


class TestMonotonicity:
    @pytest.mark.parametrize("method", sorted(METHOD_ERROR_SOURCES))
    def test_cost_non_increasing_in_each_source(self, method):
        cfg = CostModelConfig()
        rng = np.random.default_rng(11)
        sources = METHOD_ERROR_SOURCES[method]
        for _ in range(2):
            params = synthetic_params(rng, method)
            alloc = random_allocation(rng, method)
            base = get_method(method).cost_fn(params, alloc, cfg).total
            for name in sources:
                bumped = dataclasses.replace(
                    alloc, **{name: alloc.component(name) * 1.7})
                relaxed = get_method(method).cost_fn(params, bumped, cfg).total
                assert relaxed <= base, (
                    f"{method}: raising {name} increased cost")


class TestScalingProbes:
    def test_qdrift_quadratic_in_lambda(self):
        cfg = CostModelConfig()
        alloc = ErrorAllocation(eps_pea=1e-3, eps_hs=1e-4, eps_s=1e-4)
        base = MolecularParams(name="s", basis="t", N=4, eta=2,
                               lambda_value=3.0, Lambda_max=1.0, Gamma=1)
        doubled = dataclasses.replace(base, lambda_value=6.0)
        n1 = get_method("qdrift").cost_fn(base, alloc, cfg).r
        n2 = get_method("qdrift").cost_fn(doubled, alloc, cfg).r
        assert n2 >= 2 * n1
        assert n2 == pytest.approx(4 * n1, rel=1e-9)

    @pytest.mark.parametrize("method", sorted(METHOD_ERROR_SOURCES))
    def test_doubling_n_increases_total(self, method):
        cfg = CostModelConfig()
        rng = np.random.default_rng(23)
        params = synthetic_params(rng, method)
        alloc = random_allocation(rng, method)
        small = get_method(method).cost_fn(params, alloc, cfg).total
        grown = dataclasses.replace(params, N=2 * params.N)
        large = get_method(method).cost_fn(grown, alloc, cfg).total
        if method in ("qdrift", "rand_hamiltonian"):
            # exponential counts read only coefficient norms, never N
            assert large == small
        else:
            assert large > small
