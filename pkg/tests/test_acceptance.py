"""Acceptance suite: one test per criterion, each printing PASS/FAIL.

Tolerances are pinned here and nowhere else:
  - primitive formulas: exact integer equality, n in 1..64, L in 2..1024, <1s
  - lookup expansion factor: exact argmin vs brute force, 1e3 random pairs, <5s
  - lattice sum: exact vs direct enumeration at N in {8,64,512,4096}, bound
    respected, <10s
  - transcription: exact equality vs the straight-line references, 5 sets each
  - optimizer on the h2 fixture: no budget violation over 1e3 trials, median
    <= uniform split, bit-identical reruns under a fixed seed
  - iron-molybdenum cofactor fixture: sparsity median within x4 of 4.41e12,
    1e3 trials in <60s (skipped loudly if the fixture is absent)
  - benchmark table: per-molecule rank agreement of the six reference
    estimators with the published rows, each median within x100
"""
import dataclasses
import math
import time
from pathlib import Path

import numpy as np
import pytest

from qpecost import get_method, load_params, primitives as pr
from qpecost.config import CostModelConfig
from qpecost.errors import (ErrorBudget, METHOD_ERROR_SOURCES,
                            OptimizerConfig, optimize_allocation,
                            uniform_split)
from qpecost.molecule import (derive_plane_wave_count, grid_halfwidth,
                              nu_inverse_square_sum,
                              nu_inverse_square_sum_bound)

from reference_formulas import REFERENCES
from test_methods import config_dict, random_allocation, synthetic_params

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "qpecost" / "fixtures"

TABLE_TARGETS = {
    "h2":   {"taylor_naive": 2.6e13, "low_depth_taylor_naive": 2.7e15,
             "low_depth_taylor_on_the_fly": 1.2e23, "linear_t": 9.5e13,
             "sparsity_low_rank": 3.2e10, "interaction_picture": 1.3e18},
    "hf":   {"taylor_naive": 1.2e17, "low_depth_taylor_naive": 6.9e16,
             "low_depth_taylor_on_the_fly": 2.4e25, "linear_t": 2.5e15,
             "sparsity_low_rank": 1.2e12, "interaction_picture": 5.0e19},
    "h2o":  {"taylor_naive": 1.3e17, "low_depth_taylor_naive": 7.6e16,
             "low_depth_taylor_on_the_fly": 4.3e25, "linear_t": 2.8e15,
             "sparsity_low_rank": 1.5e12, "interaction_picture": 4.4e19},
    "nh3":  {"taylor_naive": 1.7e17, "low_depth_taylor_naive": 4.2e16,
             "low_depth_taylor_on_the_fly": 3.3e25, "linear_t": 1.6e15,
             "sparsity_low_rank": 2.5e12, "interaction_picture": 2.2e19},
    "ch4":  {"taylor_naive": 3.8e18, "low_depth_taylor_naive": 6.8e16,
             "low_depth_taylor_on_the_fly": 7.6e25, "linear_t": 2.5e15,
             "sparsity_low_rank": 4.5e12, "interaction_picture": 3.3e19},
    "o2":   {"taylor_naive": 4.2e18, "low_depth_taylor_naive": 1.0e17,
             "low_depth_taylor_on_the_fly": 9.7e25, "linear_t": 3.8e15,
             "sparsity_low_rank": 3.8e12, "interaction_picture": 5.9e19},
    "co2":  {"taylor_naive": 9.8e18, "low_depth_taylor_naive": 1.7e17,
             "low_depth_taylor_on_the_fly": 4.6e26, "linear_t": 6.2e15,
             "sparsity_low_rank": 1.6e13, "interaction_picture": 7.3e19},
    "nacl": {"taylor_naive": 1.2e19, "low_depth_taylor_naive": 4.2e17,
             "low_depth_taylor_on_the_fly": 7.4e26, "linear_t": 1.5e16,
             "sparsity_low_rank": 1.3e13, "interaction_picture": 2.9e20},
}

CHAIN = ("sparsity_low_rank", "linear_t", "low_depth_taylor_naive",
         "taylor_naive", "interaction_picture", "low_depth_taylor_on_the_fly")


def _report(criterion: str, passed: bool, detail: str = ""):
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] {criterion}" + (f" -- {detail}" if detail else ""))
    assert passed, f"{criterion}: {detail}"


def _median_for(params, method, trials, seed=0, cfg=None):
    spec = get_method(method)
    p = params
    if spec.needs_plane_waves:
        p = params.with_plane_wave_count(derive_plane_wave_count(params.N, 100))
    return optimize_allocation(
        method, p, ErrorBudget(), OptimizerConfig(trials=trials, seed=seed),
        cfg or CostModelConfig())


def test_formula_exactness_suite():
    start = time.time()
    ok = True
    for n in range(1, 65):
        ok &= pr.add_cost(n) == 4 * n
        ok &= pr.mult_cost(n) == 21 * n * n
        ok &= pr.div_cost(n) == 14 * n * n + 7 * n
        ok &= pr.compare_cost(n) == 8 * n
        ok &= pr.arbitrary_state_synthesis_rotations(n) == 2 ** (n + 1) - 2
        if n >= 3:
            ok &= pr.multi_controlled_not_cost(n) == 16 * (n - 2)
        eps = 2.0 ** -n
        digits = math.ceil(math.log2(1 / eps))
        ok &= pr.rotation_synthesis_cost(eps, "su2") == 10 + 12 * digits
        ok &= pr.rotation_synthesis_cost(eps, "rz") == 10 + 4 * digits
    ok &= pr.multi_controlled_not_cost(3) == 16
    for L in range(2, 1025):
        ok &= pr.qrom_cost(L) == 4 * L - 4
        ok &= (pr.uniform_superposition_cost(L, 1e-3)
               == 8 * math.ceil(math.log2(L)) + 2 * 50)
    for k in range(1, 11):
        N = 2 ** k
        half = N // 2
        rots = half * int(math.log2(half)) if half > 1 else 0
        ok &= (pr.fermionic_fft_cost(N, 2 ** -10)
               == rots * 50 + 2 * half * k)
    elapsed = time.time() - start
    _report("formula exactness (n 1..64, L 2..1024)",
            ok and elapsed < 1.0, f"{elapsed:.2f}s")


def test_qroam_brute_force_oracle():
    start = time.time()
    rng = np.random.default_rng(2024)
    ok = True
    for _ in range(1000):
        d = int(rng.integers(1, 2 ** 16 + 1))
        M = int(rng.integers(1, 65))
        powers = [2 ** i for i in range(0, d.bit_length()) if 2 ** i <= d]
        for mode, idx in (("compute", 0), ("uncompute", 1)):
            brute = min(powers, key=lambda k: pr.qroam_cost(d, M, k)[idx])
            ok &= pr.qroam_optimal_k(d, M, mode) == brute
    elapsed = time.time() - start
    _report("lookup expansion-factor argmin vs brute force (1e3 pairs)",
            ok and elapsed < 5.0, f"{elapsed:.2f}s")


def test_lattice_sum_oracle():
    start = time.time()
    ok = True
    for N in (8, 64, 512, 4096):
        m = grid_halfwidth(N)
        brute = 0.0
        for x in range(-m, m + 1):
            for y in range(-m, m + 1):
                for z in range(-m, m + 1):
                    sq = x * x + y * y + z * z
                    if sq:
                        brute += 1.0 / sq
        value = nu_inverse_square_sum(N)
        ok &= abs(value - brute) <= 1e-12 * brute
        ok &= 0.0 < value <= nu_inverse_square_sum_bound(N)
    elapsed = time.time() - start
    _report("lattice-sum enumeration oracle (N in 8..4096) with bound",
            ok and elapsed < 10.0, f"{elapsed:.2f}s")


def test_transcription_oracles():
    cfg = CostModelConfig()
    failures = []
    for method in sorted(REFERENCES):
        rng = np.random.default_rng(77000 + hash(method) % 997)
        for case in range(5):
            params = synthetic_params(rng, method)
            alloc = random_allocation(rng, method)
            expected = REFERENCES[method](
                params.to_dict(), dataclasses.asdict(alloc), config_dict(cfg))
            got = get_method(method).cost_fn(params, alloc, cfg).total
            if got != expected:
                failures.append((method, case, got, expected))
    _report("transcription parity with straight-line references (11 x 5)",
            not failures, str(failures[:3]))


def test_optimizer_properties_on_h2():
    params = load_params(FIXTURES / "h2_6-31g.json")
    budget = ErrorBudget()
    cfg = CostModelConfig()
    problems = []
    for method in sorted(METHOD_ERROR_SOURCES):
        spec = get_method(method)
        p = params
        if spec.needs_plane_waves:
            p = params.with_plane_wave_count(
                derive_plane_wave_count(params.N, 100))
        first = optimize_allocation(
            method, p, budget, OptimizerConfig(trials=1000, seed=7), cfg)
        second = optimize_allocation(
            method, p, budget, OptimizerConfig(trials=1000, seed=7), cfg)
        if first.t_counts != second.t_counts:
            problems.append(f"{method}: trace not reproducible")
        if not (min(first.t_counts) <= first.median <= max(first.t_counts)):
            problems.append(f"{method}: median outside trial range")
        uniform = spec.cost_fn(
            p, uniform_split(METHOD_ERROR_SOURCES[method], budget), cfg)
        if first.median > uniform.total:
            problems.append(f"{method}: median {first.median} above uniform "
                            f"split {uniform.total}")
        first.best_allocation.check(METHOD_ERROR_SOURCES[method], budget)
    _report("optimizer properties on the h2 fixture (11 methods x 1e3 trials)",
            not problems, "; ".join(problems[:3]))


def test_femoco_reproduction():
    path = FIXTURES / "femoco_reiher_active-space.json"
    if not path.exists():
        print("[SKIP] iron-molybdenum cofactor fixture absent -- "
              "reproduction check not run; remaining criteria unaffected")
        pytest.skip("cofactor fixture not shipped")
    params = load_params(path)
    start = time.time()
    result = optimize_allocation(
        "sparsity_low_rank", params, ErrorBudget(),
        OptimizerConfig(trials=1000, seed=0), CostModelConfig())
    elapsed = time.time() - start
    target = 4.41e12
    ratio = result.median / target
    _report("cofactor fixture: factorized-walk median within x4 of 4.41e12",
            0.25 <= ratio <= 4.0 and elapsed < 60.0,
            f"median {result.median:.3e}, ratio {ratio:.2f}, {elapsed:.1f}s")


@pytest.mark.parametrize("molecule", sorted(TABLE_TARGETS))
def test_benchmark_table_ordering_and_bands(molecule):
    path = FIXTURES / f"{molecule}_6-31g.json"
    if not path.exists():
        print(f"[SKIP] fixture {molecule} absent -- property checks carry "
              "acceptance")
        pytest.skip(f"{molecule} fixture not shipped")
    params = load_params(path)
    targets = TABLE_TARGETS[molecule]
    medians = {m: _median_for(params, m, trials=200).median for m in CHAIN}
    ref_order = sorted(CHAIN, key=lambda m: targets[m])
    got_order = sorted(CHAIN, key=lambda m: medians[m])
    ratios = {m: medians[m] / targets[m] for m in CHAIN}
    in_band = all(1e-2 <= r <= 1e2 for r in ratios.values())
    detail = (f"order {'ok' if ref_order == got_order else got_order}, "
              + ", ".join(f"{m}:{ratios[m]:.2g}" for m in CHAIN))
    _report(f"benchmark row {molecule}: rank agreement + x100 bands",
            ref_order == got_order and in_band, detail)
