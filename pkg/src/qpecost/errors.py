"""Error sources, the total accuracy budget, and the allocation optimizer.

A method's cost is a monotone non-increasing function of each error component
it reads, subject to the components summing to at most the total budget
(chemical accuracy by default). The optimizer runs many independent trials:
each samples a feasible split, improves it by pairwise budget transfers, and
records the resulting T-count. The median over trials is the headline figure;
the spread is inherent to the stochastic initialisation.
"""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field, replace

import numpy as np

ERROR_SOURCES = ("eps_pea", "eps_hs", "eps_h", "eps_s", "eps_tay")

# Which error components each estimator's cost formula reads.
METHOD_ERROR_SOURCES: dict[str, tuple[str, ...]] = {
    "qdrift": ("eps_pea", "eps_hs", "eps_s"),
    "rand_hamiltonian": ("eps_pea", "eps_hs", "eps_s"),
    "taylor_naive": ("eps_pea", "eps_hs", "eps_s"),
    "taylor_on_the_fly": ("eps_pea", "eps_hs", "eps_h", "eps_s", "eps_tay"),
    "configuration_interaction": (
        "eps_pea", "eps_hs", "eps_h", "eps_s", "eps_tay"),
    "low_depth_trotter": ("eps_pea", "eps_hs", "eps_s"),
    "low_depth_taylor_naive": ("eps_pea", "eps_hs", "eps_s"),
    "low_depth_taylor_on_the_fly": (
        "eps_pea", "eps_hs", "eps_h", "eps_s", "eps_tay"),
    "linear_t": ("eps_pea", "eps_s"),
    "sparsity_low_rank": ("eps_pea", "eps_s"),
    "interaction_picture": ("eps_pea", "eps_hs", "eps_s"),
}

CHEMICAL_ACCURACY = 0.0015


class InfeasibleBudgetError(ValueError):
    """The requested accuracy budget cannot support any allocation."""


def applicable_errors(method: str) -> set[str]:
    """Error-source identifiers read by `method`'s cost function."""
    try:
        return set(METHOD_ERROR_SOURCES[method])
    except KeyError:
        raise ValueError(
            f"unknown method {method!r}; valid methods: "
            f"{', '.join(sorted(METHOD_ERROR_SOURCES))}") from None


def phase_estimation_time(eps_pea: float) -> float:
    """Total evolution time needed to resolve the phase to eps_pea."""
    if eps_pea <= 0:
        raise ValueError(f"eps_pea must be > 0, got {eps_pea}")
    return 4.7 / eps_pea


@dataclass(frozen=True)
class ErrorBudget:
    """Total energy accuracy target with optional per-source caps."""
    total: float = CHEMICAL_ACCURACY
    caps: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.total <= 0:
            raise InfeasibleBudgetError(
                f"budget total must be > 0, got {self.total}")


@dataclass(frozen=True)
class ErrorAllocation:
    """A concrete split of the budget across the five error sources.

    Components a method does not read stay at 0. eps_ss (per-rotation
    synthesis accuracy) is derived from eps_s and the rotation count of the
    costed circuit, never allocated independently.
    """
    eps_pea: float
    eps_hs: float = 0.0
    eps_h: float = 0.0
    eps_s: float = 0.0
    eps_tay: float = 0.0

    def component(self, name: str) -> float:
        return getattr(self, name)

    def check(self, sources: tuple[str, ...], budget: ErrorBudget) -> None:
        total = 0.0
        for name in sources:
            value = self.component(name)
            if value <= 0:
                raise InfeasibleBudgetError(
                    f"allocated component {name} must be > 0, got {value}")
            cap = budget.caps.get(name)
            if cap is not None and value > cap * (1 + 1e-12):
                raise InfeasibleBudgetError(
                    f"{name}={value} exceeds its cap {cap}")
            total += value
        if total > budget.total * (1 + 1e-9):
            raise InfeasibleBudgetError(
                f"allocation sum {total} exceeds budget {budget.total}")

    @classmethod
    def from_vector(cls, sources: tuple[str, ...],
                    values: "np.ndarray | list[float]") -> "ErrorAllocation":
        return cls(**{name: float(v) for name, v in zip(sources, values)})


@dataclass(frozen=True)
class OptimizerConfig:
    """Stochastic-search settings; fixed seed makes runs bit-reproducible."""
    trials: int = 1000
    seed: int = 0
    max_evals_per_trial: int = 160
    init_distribution: str = "dirichlet"

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")


@dataclass
class AllocationResult:
    """Outcome of optimize_allocation: best split, all trials, median."""
    best_allocation: ErrorAllocation
    best_breakdown: object
    t_counts: list[int]
    median: int

    def __iter__(self):
        return iter((self.best_allocation, self.t_counts, self.median))


def uniform_split(sources: tuple[str, ...], budget: ErrorBudget) -> ErrorAllocation:
    """Budget divided evenly over the applicable sources (cap-respecting)."""
    share = budget.total / len(sources)
    values = [min(share, budget.caps.get(name, share)) for name in sources]
    return ErrorAllocation.from_vector(sources, values)


def _sample_start(rng: np.random.Generator, sources: tuple[str, ...],
                  budget: ErrorBudget) -> np.ndarray:
    x = rng.dirichlet(np.ones(len(sources))) * budget.total
    floor = budget.total * 1e-9
    x = np.maximum(x, floor)
    x *= budget.total / x.sum()
    for i, name in enumerate(sources):
        cap = budget.caps.get(name)
        if cap is not None and x[i] > cap:
            x[i] = cap
    return x


def optimize_allocation(method: str, params, budget: ErrorBudget,
                        cfg: OptimizerConfig,
                        cost_config=None) -> AllocationResult:
    """Minimise a method's T-count over feasible error splits.

    Each trial draws a random feasible split of the budget over the method's
    applicable sources, then greedily transfers budget between source pairs
    while the cost drops. Trial 0 starts from the uniform split, so the
    returned best never exceeds the uniform-split cost.
    """
    from .config import CostModelConfig
    from .methods import get_method

    if budget.total <= 0:  # defensive; ErrorBudget already rejects this
        raise InfeasibleBudgetError("infeasible budget")
    spec = get_method(method)
    params.require(spec.required_fields, method)
    if cost_config is None:
        cost_config = CostModelConfig()
    sources = METHOD_ERROR_SOURCES[method]
    k = len(sources)

    def evaluate(vec: np.ndarray):
        alloc = ErrorAllocation.from_vector(sources, vec)
        alloc.check(sources, budget)
        return spec.cost_fn(params, alloc, cost_config)

    def descend(vec: np.ndarray, breakdown, evals_left: int):
        best_vec, best = vec, breakdown
        improved = True
        while improved and evals_left > 0:
            improved = False
            for frac in (0.5, 0.25, 0.1, 0.04):
                for j in range(k):
                    for i in range(k):
                        if i == j or evals_left <= 0:
                            continue
                        cand = best_vec.copy()
                        move = frac * cand[j]
                        cand[j] -= move
                        cand[i] += move
                        cap = budget.caps.get(sources[i])
                        if cap is not None and cand[i] > cap:
                            continue
                        if cand[j] <= 0:
                            continue
                        trial = evaluate(cand)
                        evals_left -= 1
                        if trial.total < best.total:
                            best_vec, best = cand, trial
                            improved = True
        return best_vec, best

    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.trials)
    t_counts: list[int] = []
    best_vec = None
    best_breakdown = None
    for trial_index in range(cfg.trials):
        rng = np.random.default_rng(seeds[trial_index])
        if trial_index == 0:
            start_alloc = uniform_split(sources, budget)
            start = np.array([start_alloc.component(s) for s in sources])
        else:
            start = _sample_start(rng, sources, budget)
        breakdown = evaluate(start)
        vec, breakdown = descend(start, breakdown, cfg.max_evals_per_trial)
        t_counts.append(breakdown.total)
        if best_breakdown is None or breakdown.total < best_breakdown.total:
            best_vec, best_breakdown = vec, breakdown

    median = statistics.median_low(t_counts)
    best_alloc = ErrorAllocation.from_vector(sources, best_vec)
    return AllocationResult(best_allocation=best_alloc,
                            best_breakdown=best_breakdown,
                            t_counts=t_counts, median=median)
