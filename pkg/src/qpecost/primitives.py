"""T-gate costs of the fault-tolerant circuit building blocks.

Every routine here is a pure integer formula for the non-Clifford cost of a
standard reversible/quantum subcircuit: fixed-point arithmetic, multi-controlled
gates, rotation synthesis, state preparation, table lookups (QROM/QROAM),
uniform-superposition preparation and the fermionic fast Fourier transform.
Toffoli gates are converted at 4 T each; additive O(1) terms are dropped.
"""
import math

T_PER_TOFFOLI = 4


def _check_bits(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive bit count, got {n}")


def add_cost(n: int) -> int:
    """T cost of an n-bit addition or subtraction."""
    _check_bits(n)
    return 4 * n


def mult_cost(n: int) -> int:
    """T cost of an n-bit multiplication."""
    _check_bits(n)
    return 21 * n * n


def div_cost(n: int) -> int:
    """T cost of an n-bit integer division."""
    _check_bits(n)
    return 14 * n * n + 7 * n


def compare_cost(n: int) -> int:
    """T cost of comparing two n-bit registers (2n Toffolis)."""
    _check_bits(n)
    return 8 * n


def multi_controlled_not_cost(m: int) -> int:
    """T cost of a NOT with m controls.

    m >= 3 uses the 16(m-2) ancilla-free construction; m = 2 is a plain
    Toffoli (4 T) and m = 1 is a Clifford CNOT (free).
    """
    if m < 1:
        raise ValueError(f"control count must be >= 1, got {m}")
    if m == 1:
        return 0
    if m == 2:
        return T_PER_TOFFOLI
    return 16 * (m - 2)


def rotation_synthesis_cost(eps_ss: float, kind: str = "rz",
                            controlled: str = "none") -> int:
    """T cost of synthesising one rotation to accuracy eps_ss.

    Args:
        eps_ss: per-rotation synthesis accuracy, 0 < eps_ss < 1.
        kind: "su2" for a general single-qubit unitary, "rz" for an axis
            rotation (R_x, R_y, R_z all cost the same up to Cliffords).
        controlled: "none", "single" (one control on an axis rotation,
            2x base) or "general" (3x base).
    """
    if not 0.0 < eps_ss < 1.0:
        raise ValueError(f"eps_ss must lie in (0, 1), got {eps_ss}")
    digits = math.ceil(math.log2(1.0 / eps_ss))
    if kind == "su2":
        base = 10 + 12 * digits
    elif kind == "rz":
        base = 10 + 4 * digits
    else:
        raise ValueError(f"unknown rotation kind {kind!r}")
    if controlled == "none":
        return base
    if controlled == "single":
        return 2 * base
    if controlled == "general":
        return 3 * base
    raise ValueError(f"unknown control mode {controlled!r}")


def arbitrary_state_synthesis_rotations(n: int) -> int:
    """Number of arbitrary rotations to prepare a state on n qubits."""
    _check_bits(n)
    return 2 ** (n + 1) - 2


def qrom_cost(L: int) -> int:
    """T cost of a unary-iterator table lookup over L entries (4L - 4)."""
    if L < 2:
        raise ValueError(f"QROM needs at least 2 entries, got {L}")
    return 4 * L - 4


def _is_power_of_two(k: int) -> bool:
    return k >= 1 and (k & (k - 1)) == 0


def qroam_cost(d: int, M: int, k: int) -> tuple[int, int]:
    """Toffoli cost of an ancilla-trading lookup over d entries of M bits.

    Returns (compute, uncompute) Toffoli counts for expansion factor k,
    a power of two in [1, d]. Callers convert to T at 4 per Toffoli.
    """
    if d < 1 or M < 1:
        raise ValueError("d and M must be >= 1")
    if not _is_power_of_two(k) or k > d:
        raise ValueError(f"k must be a power of two in [1, d], got {k}")
    compute = math.ceil(d / k) + M * (k - 1)
    uncompute = math.ceil(d / k) + k
    return compute, uncompute


def qroam_optimal_k(d: int, M: int, mode: str = "compute") -> int:
    """Power of two in [1, d] minimising the QROAM cost; ties go small."""
    if d < 1 or M < 1:
        raise ValueError("d and M must be >= 1")
    if mode not in ("compute", "uncompute"):
        raise ValueError(f"unknown mode {mode!r}")
    idx = 0 if mode == "compute" else 1
    best_k, best_cost = 1, qroam_cost(d, M, 1)[idx]
    k = 2
    while k <= d:
        cost = qroam_cost(d, M, k)[idx]
        if cost < best_cost:
            best_k, best_cost = k, cost
        k *= 2
    return best_k


def uniform_superposition_cost(L: int, eps_ss: float) -> int:
    """T cost of preparing a uniform superposition over L basis states."""
    if L < 2:
        raise ValueError(f"need at least 2 states, got {L}")
    return 8 * math.ceil(math.log2(L)) + 2 * rotation_synthesis_cost(eps_ss, "rz")


def fermionic_fft_rotations(N: int) -> int:
    """Single-qubit z-rotation count of an N-mode fermionic FFT."""
    if not _is_power_of_two(N) or N < 2:
        raise ValueError(f"mode count must be a power of two >= 2, got {N}")
    half = N // 2
    return half * int(math.log2(half)) if half > 1 else 0


def fermionic_fft_cost(N: int, eps_ss: float) -> int:
    """T cost of an N-mode fermionic FFT (N a power of two).

    (N/2)log2(N/2) z-rotations plus (N/2)log2(N) two-mode mixers at
    2 T each.
    """
    if not _is_power_of_two(N) or N < 2:
        raise ValueError(f"mode count must be a power of two >= 2, got {N}")
    half = N // 2
    rot = fermionic_fft_rotations(N)
    f2 = half * int(math.log2(N))
    return rot * rotation_synthesis_cost(eps_ss, "rz") + 2 * f2


def taylor_series_eval_cost(order: int, n: int, kind: str) -> int:
    """T cost of evaluating a function by fixed-order series on n-bit words.

    exp: order-1 multiplications, order-1 divisions and order additions.
    sqrt_babylonian: one addition and one division per refinement order.
    cosine_cordic: a single prefactor division plus 2 additions per order
    (shifts and power-of-two scalings are free).
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    _check_bits(n)
    if kind == "exp":
        return ((order - 1) * mult_cost(n) + (order - 1) * div_cost(n)
                + order * add_cost(n))
    if kind == "sqrt_babylonian":
        return order * (add_cost(n) + div_cost(n))
    if kind == "cosine_cordic":
        return div_cost(n) + 2 * order * add_cost(n)
    raise ValueError(f"unknown series kind {kind!r}")
