"""Molecular parameter records and the plane-wave quantities derived from them.

A parameter file is a single JSON object named ``<molecule>_<basis>.json``
holding the scalars the cost estimators consume: orbital counts, Hamiltonian
coefficient norms, orbital-extent constants and (for plane-wave methods) the
computational cell volume. Records are immutable after loading.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field, fields, replace
from functools import lru_cache
from pathlib import Path

__all__ = [
    "MolecularParams", "PlaneWaveDerived", "SchemaError", "load_params",
    "save_params", "derive_plane_wave_count", "nu_inverse_square_sum",
    "nu_inverse_square_sum_bound", "norm_bounds", "lambda_prime_on_the_fly",
    "plane_wave_lambda", "ci_gamma", "grid_halfwidth", "nu_norm_square_sum",
]


class SchemaError(ValueError):
    """A parameter file violates the schema or an invariant."""


_OPTIONAL_FLOATS = (
    "Omega", "x_max", "phi_max", "phi_prime_max", "alpha_ci", "gamma1_ci",
    "gamma2_ci", "norm_T", "norm_U", "norm_V", "H_norm_bound",
)


@dataclass(frozen=True)
class MolecularParams:
    """Molecule/basis-derived scalars consumed by the cost formulas.

    Energies in Hartree, volumes in bohr^3. Optional fields stay None until
    an estimator that needs them reports them missing by name.
    """
    name: str
    basis: str
    N: int                      # spin-orbital count
    eta: int                    # electron count
    lambda_value: float         # sum of |coefficient| over Hamiltonian terms
    Lambda_max: float           # largest |coefficient|
    Gamma: int                  # Hamiltonian term count
    J: int | None = None        # nucleus count
    charges: list[float] | None = None
    Omega: float | None = None  # plane-wave cell volume
    x_max: float | None = None
    phi_max: float | None = None
    phi_prime_max: float | None = None
    alpha_ci: float | None = None
    gamma1_ci: float | None = None
    gamma2_ci: float | None = None
    L_rank: int | None = None
    norm_T: float | None = None
    norm_U: float | None = None
    norm_V: float | None = None
    H_norm_bound: float | None = None
    basis_contraction_d: int = 6
    metadata: dict | None = None

    def __post_init__(self):
        if self.eta < 1:
            raise SchemaError(f"eta must be >= 1, got {self.eta}")
        if self.N < self.eta:
            raise SchemaError(f"N >= eta violated: N={self.N}, eta={self.eta}")
        if self.Lambda_max <= 0:
            raise SchemaError(f"Lambda_max must be > 0, got {self.Lambda_max}")
        if self.lambda_value < self.Lambda_max:
            raise SchemaError(
                "lambda_value >= Lambda_max violated: "
                f"{self.lambda_value} < {self.Lambda_max}")
        if self.Gamma < 1:
            raise SchemaError(f"Gamma must be >= 1, got {self.Gamma}")
        if self.Omega is not None and self.Omega <= 0:
            raise SchemaError(f"Omega must be > 0, got {self.Omega}")
        if self.L_rank is not None:
            if self.L_rank < 1:
                raise SchemaError(f"L_rank must be >= 1, got {self.L_rank}")
            if self.L_rank > self.N ** 2 / 4:
                raise SchemaError(
                    f"L_rank <= N^2/4 violated: {self.L_rank} > {self.N ** 2 / 4}")
        if self.basis_contraction_d < 1:
            raise SchemaError("basis_contraction_d must be >= 1")
        if self.charges is not None:
            if self.J is not None and len(self.charges) != self.J:
                raise SchemaError(
                    f"charges has {len(self.charges)} entries but J={self.J}")
            if abs(sum(self.charges) - self.eta) > 1e-9:
                warnings.warn(
                    f"{self.name}: nuclear charges sum to {sum(self.charges)} "
                    f"but eta={self.eta} (ionic species?)", stacklevel=2)

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if value is not None:
                out[f.name] = value
        return out

    def require(self, names: list[str], context: str) -> None:
        """Raise naming every field in `names` that is unset."""
        missing = [n for n in names if getattr(self, n, None) is None]
        if missing:
            raise SchemaError(
                f"{context} needs parameter field(s) {', '.join(missing)} "
                f"not present for molecule {self.name!r}")

    def with_plane_wave_count(self, n_pw: int) -> "MolecularParams":
        return replace(self, N=n_pw)


_FIELD_NAMES = {f.name for f in fields(MolecularParams)}


def load_params(path: str | Path) -> MolecularParams:
    """Load and validate a parameter file."""
    path = Path(path)
    if not path.exists():
        raise SchemaError(f"parameter file not found: {path}")
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise SchemaError(f"{path} must hold a single JSON object")
    unknown = set(raw) - _FIELD_NAMES
    if unknown:
        raise SchemaError(
            f"{path} has unknown field(s): {', '.join(sorted(unknown))}")
    for key in ("name", "basis", "N", "eta", "lambda_value", "Lambda_max", "Gamma"):
        if key not in raw:
            raise SchemaError(f"{path} is missing required field {key!r}")
    return MolecularParams(**raw)


def save_params(params: MolecularParams, directory: str | Path) -> Path:
    """Write a record back out under its canonical file name."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    fname = f"{params.name}_{params.basis}.json".replace(" ", "")
    path = directory / fname
    path.write_text(json.dumps(params.to_dict(), indent=2, sort_keys=True) + "\n")
    return path


def derive_plane_wave_count(n_gauss: int, multiplier: float) -> int:
    """Plane-wave spin-orbital count from a Gaussian count (round half up)."""
    if n_gauss < 1:
        raise ValueError(f"n_gauss must be >= 1, got {n_gauss}")
    if multiplier <= 0:
        raise ValueError(f"multiplier must be > 0, got {multiplier}")
    return int(math.floor(multiplier * n_gauss + 0.5))


def grid_halfwidth(N: int) -> int:
    """Half-width m of the integer reciprocal-space cube for N spin orbitals.

    The N/2 spatial modes occupy [-m, m]^3 with m = floor((N/2)^(1/3)), so
    N=8 yields components in {-1, 0, 1}.
    """
    if N < 8:
        raise ValueError(f"need N >= 8 for a 2x2x2 grid, got {N}")
    return max(1, int(math.floor((N / 2) ** (1.0 / 3.0) + 1e-9)))


@lru_cache(maxsize=None)
def nu_inverse_square_sum(N: int, enumeration_limit: int = 10 ** 6) -> float:
    """Exact lattice sum of 1/|nu|^2 over the nonzero modes for N orbitals.

    Enumerates directly up to `enumeration_limit` orbitals and falls back to
    the analytic upper bound beyond that.
    """
    if N > enumeration_limit:
        return nu_inverse_square_sum_bound(N)
    m = grid_halfwidth(N)
    total = 0.0
    for nx in range(-m, m + 1):
        for ny in range(-m, m + 1):
            for nz in range(-m, m + 1):
                sq = nx * nx + ny * ny + nz * nz
                if sq:
                    total += 1.0 / sq
    return total


def _inv_r2_square_integral(s: float) -> float:
    """Simpson quadrature of the planar integral of 1/(x^2+y^2) over [1,s]^2."""
    if s <= 1.0:
        return 0.0

    def inner(y: float) -> float:
        return (math.atan(s / y) - math.atan(1.0 / y)) / y

    steps = 400
    h = (s - 1.0) / steps
    acc = inner(1.0) + inner(s)
    for i in range(1, steps):
        acc += inner(1.0 + i * h) * (4 if i % 2 else 2)
    return acc * h / 3.0


def nu_inverse_square_sum_bound(N: int) -> float:
    """Analytic upper bound on the 1/|nu|^2 lattice sum for N orbitals."""
    s = 2 * grid_halfwidth(N) + 1
    return (4 * math.pi * (math.sqrt(3) * s / 2 - 1) + 3 - 3 / s
            + 3 * _inv_r2_square_integral(s))


def nu_norm_square_sum(N: int) -> int:
    """Exact lattice sum of |nu|^2 over the mode cube for N orbitals."""
    m = grid_halfwidth(N)
    side = 2 * m + 1
    return side ** 3 * m * (m + 1)


def norm_bounds(params: MolecularParams) -> tuple[float, float, float]:
    """Operator-norm bounds (maxT, maxU, maxV) for the plane-wave Hamiltonian."""
    params.require(["Omega"], "norm_bounds")
    eta, omega, N = params.eta, params.Omega, params.N
    if eta == 0:
        return 0.0, 0.0, 0.0
    nu_sum = nu_inverse_square_sum(N)
    max_v = eta ** 2 / (2 * math.pi * omega ** (1 / 3)) * nu_sum
    max_u = 2 * max_v
    max_t = 2 * math.pi ** 2 * eta / omega ** (2 / 3) * N ** (2 / 3)
    return max_t, max_u, max_v


def lambda_prime_on_the_fly(params: MolecularParams) -> float:
    """Coefficient one-norm of the sign-decomposed plane-wave Hamiltonian.

    The dominant candidate is the diagonal coefficient bound; when it is not
    the largest, the off-diagonal and kinetic candidates take over.
    """
    params.require(["Omega"], "lambda_prime_on_the_fly")
    N, eta, omega = params.N, params.eta, params.Omega
    cube = (8 * N) ** 3
    first = cube * ((2 * eta + 1) / (4 * omega ** (1 / 3) * math.pi)
                    - math.pi ** 2 / (N * omega ** (2 / 3)))
    second = cube * 2 * (1 / (8 * math.pi * omega ** (1 / 3)))
    third = cube * 2 * (6 * math.pi ** 2 / (N ** (1 / 3) * omega ** (2 / 3)))
    candidates = [first, second, third]
    value = first if first >= max(second, third) else max(second, third)
    if value <= 0:
        raise ValueError(
            f"nonpositive coefficient norm from N={N}, eta={eta}, Omega={omega}; "
            f"candidates {candidates}")
    return value


@lru_cache(maxsize=None)
def _plane_wave_lambda_cached(N: int, eta: int, omega: float) -> float:
    nu_sum = nu_inverse_square_sum(N)
    s2 = nu_norm_square_sum(N)
    lam_v = N * (N - 1) * nu_sum / (16 * math.pi * omega ** (1 / 3))
    lam_u = N * ((2 * eta + 1) * nu_sum / (8 * math.pi * omega ** (1 / 3))
                 + math.pi ** 2 * s2 / (N * omega ** (2 / 3)))
    lam_t = math.pi ** 2 * s2 / omega ** (2 / 3)
    return lam_t + lam_u + lam_v


def plane_wave_lambda(params: MolecularParams) -> float:
    """Coefficient one-norm of the dual-basis Hamiltonian.

    Kinetic part from the diagonal mode energies; potential parts from the
    per-mode coefficient bounds summed over the interaction pairs.
    """
    params.require(["Omega"], "plane_wave_lambda")
    return _plane_wave_lambda_cached(params.N, params.eta, params.Omega)


def ci_gamma(eta: int, N: int) -> int:
    """Sparsity of the Configuration Interaction matrix (exact binomials)."""
    if eta < 2:
        raise ValueError(f"eta must be >= 2, got {eta}")
    if N <= eta:
        raise ValueError(f"N must exceed eta, got N={N}, eta={eta}")
    return (math.comb(eta, 2) * math.comb(N - eta, 2)
            + math.comb(eta, 1) * math.comb(N - eta, 1) + 1)


@dataclass(frozen=True)
class PlaneWaveDerived:
    """Plane-wave quantities derived from a Gaussian-basis record."""
    N_pw: int
    multiplier: float
    nu_sum: float = field(default=0.0)
    lambda_prime: float = field(default=0.0)

    @classmethod
    def from_params(cls, params: MolecularParams,
                    multiplier: float = 100.0) -> "PlaneWaveDerived":
        n_pw = derive_plane_wave_count(params.N, multiplier)
        pw_params = params.with_plane_wave_count(n_pw)
        nu = nu_inverse_square_sum(n_pw)
        bound = nu_inverse_square_sum_bound(n_pw)
        if not 0.0 < nu <= bound:
            raise ValueError(
                f"lattice sum {nu} escapes its analytic bracket (0, {bound}]")
        lam_prime = lambda_prime_on_the_fly(pw_params) if params.Omega else 0.0
        return cls(N_pw=n_pw, multiplier=multiplier, nu_sum=nu,
                   lambda_prime=lam_prime)
