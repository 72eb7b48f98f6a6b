"""Registry of the eleven implemented estimators."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .breakdown import CostBreakdown
from .ci import configuration_interaction_cost
from .dyson import interaction_picture_cost
from .plane_wave import (low_depth_taylor_naive_cost,
                         low_depth_taylor_on_the_fly_cost,
                         low_depth_trotter_cost)
from .qrom import linear_t_cost
from .sparsity import sparsity_low_rank_cost
from .taylor import taylor_naive_cost, taylor_on_the_fly_cost
from .trotter_random import qdrift_cost, rand_hamiltonian_cost

__all__ = ["CostBreakdown", "MethodSpec", "METHODS", "get_method",
           "method_names"]


@dataclass(frozen=True)
class MethodSpec:
    name: str
    cost_fn: Callable
    required_fields: tuple[str, ...] = ()
    needs_plane_waves: bool = False


METHODS: dict[str, MethodSpec] = {
    spec.name: spec for spec in (
        MethodSpec("qdrift", qdrift_cost),
        MethodSpec("rand_hamiltonian", rand_hamiltonian_cost),
        MethodSpec("taylor_naive", taylor_naive_cost),
        MethodSpec("taylor_on_the_fly", taylor_on_the_fly_cost,
                   ("phi_max", "phi_prime_max", "J")),
        MethodSpec("configuration_interaction", configuration_interaction_cost,
                   ("phi_max", "alpha_ci", "gamma1_ci", "gamma2_ci")),
        MethodSpec("low_depth_trotter", low_depth_trotter_cost,
                   ("Omega",), needs_plane_waves=True),
        MethodSpec("low_depth_taylor_naive", low_depth_taylor_naive_cost,
                   ("Omega",), needs_plane_waves=True),
        MethodSpec("low_depth_taylor_on_the_fly",
                   low_depth_taylor_on_the_fly_cost,
                   ("Omega",), needs_plane_waves=True),
        MethodSpec("linear_t", linear_t_cost,
                   ("Omega", "H_norm_bound"), needs_plane_waves=True),
        MethodSpec("sparsity_low_rank", sparsity_low_rank_cost, ("L_rank",)),
        MethodSpec("interaction_picture", interaction_picture_cost,
                   ("Omega",), needs_plane_waves=True),
    )
}


def get_method(name: str) -> MethodSpec:
    try:
        return METHODS[name]
    except KeyError:
        raise ValueError(
            f"unknown method {name!r}; valid methods: "
            f"{', '.join(sorted(METHODS))}") from None


def method_names() -> list[str]:
    return sorted(METHODS)
