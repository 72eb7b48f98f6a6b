"""Shared pieces of the series-based estimators."""
import math

from ..primitives import (add_cost, compare_cost, mult_cost,
                          multi_controlled_not_cost, rotation_synthesis_cost,
                          taylor_series_eval_cost)

LN2 = math.log(2)


def truncation_order(r: int, eps_hs: float) -> int:
    """Series truncation order for r segments at overall accuracy eps_hs."""
    x = 2 * r / eps_hs
    if x <= 1:
        raise ValueError(
            f"degenerate truncation: 2r/eps_hs = {x} must exceed 1")
    return max(1, math.ceil(-1 + 2 * math.log(x) / math.log(math.log(x) + 1)))


def segment_count(lam: float, eps_pea: float, multiplier: float = 1.0) -> int:
    """Number of ln2-length evolution segments for one-norm lam."""
    t = 4.7 / eps_pea
    return max(1, math.ceil(lam * t / LN2 * multiplier))


def taylor_segment_total(r: int, K: int, prep_w: int, select: int,
                         eps_ss: float) -> tuple[int, dict[str, int]]:
    """Total and per-stage split of the amplified LCU walk over r segments.

    One walk costs the angle ladder (K-1 controlled rotations), 2K
    coefficient preparations and K Select applications; amplitude
    amplification triples it and the phase-estimation control adaptation
    adds two multi-controlled NOTs per segment.
    """
    c_ry = rotation_synthesis_cost(eps_ss, "rz", "single")
    rotations = 3 * r * (K - 1) * c_ry
    prepare = 3 * r * 2 * K * prep_w
    sel = 3 * r * K * select
    adaptation = r * 2 * multi_controlled_not_cost(math.ceil(K / 2) + 1)
    total = rotations + prepare + sel + adaptation
    return total, {"rotations": rotations, "prepare": prepare,
                   "select": sel, "walk_overhead": adaptation}


def select_gauss_cost(N: int) -> int:
    """Select over ladder-operator strings: four accumulator sweeps."""
    per_op = 4 * N + N * multi_controlled_not_cost(math.ceil(math.log2(N)))
    return 4 * per_op


def kickback_cost(n: int, eps_ss: float) -> int:
    """Sign-kickback between the two coefficient-sampling calls."""
    return (2 * (add_cost(n) + mult_cost(n) + compare_cost(n))
            + rotation_synthesis_cost(eps_ss, "rz", "single"))


def orbital_eval_cost(order: int, n: int, d: int) -> int:
    """Evaluate one contracted Gaussian orbital on an n-bit grid point."""
    per_prim = (3 * add_cost(n)
                + 3 * mult_cost(n) + 2 * add_cost(n)
                + mult_cost(n)
                + taylor_series_eval_cost(order, n, "exp")
                + 3 * mult_cost(n))
    return d * per_prim


def orbital_eval_laplacian_cost(order: int, n: int, d: int) -> int:
    """Evaluate an orbital together with its Laplacian prefactors."""
    from ..primitives import div_cost
    per_prim = (3 * add_cost(n)
                + 3 * mult_cost(n) + 2 * add_cost(n)
                + mult_cost(n)
                + taylor_series_eval_cost(order, n, "exp")
                + 3 * mult_cost(n)
                + 3 * (4 * add_cost(n) + mult_cost(n) + div_cost(n))
                + 2 * add_cost(n) + mult_cost(n))
    return d * per_prim


def radial_projection_cost(order: int, n: int) -> int:
    """Compute |xi| sin(theta) from a displacement register."""
    return (2 * mult_cost(n) + add_cost(n)
            + taylor_series_eval_cost(order, n, "sqrt_babylonian"))


def register_bits(mu: float) -> int:
    """Per-coordinate word size for a mu-point discretisation."""
    return max(1, math.ceil(math.ceil(math.log2(mu)) / 3))
