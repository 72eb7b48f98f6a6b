"""Turn a converged SCF into a parameter file for the cost engine.

Conventions (recorded in the emitted metadata):
  - effective one-body T_pq = h_pq - 1/2 sum_r (pr|rq), two-body
    V_pqrs = (pq|rs)/2, both over spatial orbitals in chemist ordering;
  - the coefficient one-norm is lambda = lambda_T + lambda_V with
    lambda_T = 2 sum |T_pq| (spin) and lambda_V from the eigendecomposition
    of the (pq),(rs) reshaping W: lambda_V = 1/2 sum_l |w_l| (sum_pq
    |g^l_pq|)^2, the factorized-form upper bound;
  - orbital-extent constants come from dense grid sampling of all molecular
    orbitals, values and analytic first/second derivatives.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .scf import SCFResult, run_scf
from .geometries import lookup, parse_xyz

COEFF_FLOOR = 1e-10
RANK_CUTOFF = 1e-8


@dataclass
class ExtractionRequest:
    molecule: str
    basis: str = "6-31g"
    geometry_xyz: str | None = None
    charge: int = 0
    multiplicity: int | None = None
    ao_labels: list[str] | None = None
    cell_volume: float | None = None
    rank_cutoff: float = RANK_CUTOFF


def mo_integrals(scf: SCFResult):
    """Core Hamiltonian and (pq|rs) in the molecular-orbital basis."""
    C = scf.mo_coefficients
    h_mo = C.T @ scf.core_hamiltonian @ C
    eri_mo = np.einsum("pi,pqrs->iqrs", C, scf.eri, optimize=True)
    eri_mo = np.einsum("qj,iqrs->ijrs", C, eri_mo, optimize=True)
    eri_mo = np.einsum("rk,ijrs->ijks", C, eri_mo, optimize=True)
    eri_mo = np.einsum("sl,ijks->ijkl", C, eri_mo, optimize=True)
    return h_mo, eri_mo


def chemist_coefficients(h_mo: np.ndarray, eri_mo: np.ndarray):
    """Effective one-body T and two-body V for the a+ a a+ a ordering."""
    t_eff = h_mo - 0.5 * np.einsum("prrq->pq", eri_mo)
    v = 0.5 * eri_mo
    return t_eff, v


def low_rank_factorize(two_body_tensor: np.ndarray,
                       cutoff: float = RANK_CUTOFF,
                       symmetry_tol: float = 1e-8):
    """Eigendecomposition of the (pq),(rs) reshaping of the two-body tensor.

    Returns (rank above cutoff, eigenvalues, eigenvectors). The tensor must
    carry the p<->q, r<->s and pq<->rs symmetries.
    """
    v = np.asarray(two_body_tensor, dtype=float)
    n = v.shape[0]
    if v.shape != (n, n, n, n):
        raise ValueError(f"expected rank-4 tensor with equal sides, got {v.shape}")
    for perm, label in (((1, 0, 2, 3), "p<->q"), ((0, 1, 3, 2), "r<->s"),
                        ((2, 3, 0, 1), "pq<->rs")):
        if not np.allclose(v, v.transpose(perm), atol=symmetry_tol):
            raise ValueError(f"two-body tensor violates {label} symmetry")
    w_matrix = v.reshape(n * n, n * n)
    eigenvalues, eigenvectors = np.linalg.eigh(w_matrix)
    order = np.argsort(-np.abs(eigenvalues))
    eigenvalues = eigenvalues[order]
    eigenvectors = eigenvectors[:, order]
    rank = int(np.sum(np.abs(eigenvalues) > cutoff))
    return rank, eigenvalues, eigenvectors


def coefficient_norms(t_eff: np.ndarray, v: np.ndarray,
                      cutoff: float = RANK_CUTOFF):
    """lambda, Lambda, Gamma and the factorization rank."""
    n = t_eff.shape[0]
    rank, w, g = low_rank_factorize(2.0 * v, cutoff)  # undo the 1/2 for W=(pq|rs)
    lam_t = 2.0 * float(np.sum(np.abs(t_eff)))
    g_one_norms = np.abs(g).sum(axis=0)
    lam_v = 0.5 * float(np.sum(np.abs(w) * g_one_norms ** 2))
    lam = lam_t + lam_v
    biggest = max(float(np.max(np.abs(t_eff))), float(np.max(np.abs(v))))
    gamma = int(2 * np.sum(np.abs(t_eff) > COEFF_FLOOR)
                + 4 * np.sum(np.abs(v) > COEFF_FLOOR))
    return {"lambda_value": lam, "lambda_T": lam_t, "lambda_V": lam_v,
            "Lambda_max": biggest, "Gamma": gamma, "L_rank": max(1, rank)}


def _ao_values(basis, points, derivative=0):
    """AO values (0), gradients (1) or Laplacians (2) at grid points."""
    n_pts = points.shape[0]
    if derivative == 1:
        out = np.zeros((len(basis), n_pts, 3))
    else:
        out = np.zeros((len(basis), n_pts))
    for idx, f in enumerate(basis):
        rel = points - f.center
        r2 = np.sum(rel * rel, axis=1)
        mono = np.ones(n_pts)
        for d in range(3):
            if f.powers[d]:
                mono = mono * rel[:, d] ** f.powers[d]
        for a, c in zip(f.exponents, f.coefficients):
            gauss = np.exp(-a * r2)
            if derivative == 0:
                out[idx] += c * mono * gauss
            elif derivative == 1:
                for d in range(3):
                    i = f.powers[d]
                    poly = -2 * a * rel[:, d]
                    if i:
                        with np.errstate(divide="ignore", invalid="ignore"):
                            poly = poly + np.where(rel[:, d] != 0,
                                                   i / rel[:, d], 0.0)
                    out[idx, :, d] += c * mono * poly * gauss
            else:
                lap = np.zeros(n_pts)
                for d in range(3):
                    i = f.powers[d]
                    term = (4 * a * a * rel[:, d] ** 2
                            - 2 * a * (2 * i + 1))
                    if i >= 1:
                        with np.errstate(divide="ignore", invalid="ignore"):
                            term = term + np.where(
                                rel[:, d] != 0,
                                i * (i - 1) / np.maximum(rel[:, d] ** 2, 1e-300),
                                0.0)
                    lap += term
                out[idx] += c * mono * lap * gauss
    return out


def orbital_extent_constants(scf: SCFResult, spacing: float = 0.3,
                             padding: float = 6.0):
    """phi_max, gradient/Laplacian bounds and decay constants from a grid."""
    coords = scf.coords
    lo = coords.min(axis=0) - padding
    hi = coords.max(axis=0) + padding
    axes = [np.arange(lo[d], hi[d] + spacing, spacing) for d in range(3)]
    mesh = np.meshgrid(*axes, indexing="ij")
    points = np.stack([m.ravel() for m in mesh], axis=1)

    C = scf.mo_coefficients
    ao = _ao_values(scf.basis, points)
    mo = C.T @ ao
    ao_grad = _ao_values(scf.basis, points, derivative=1)
    mo_grad = np.einsum("mi,mpd->ipd", C, ao_grad)
    ao_lap = _ao_values(scf.basis, points, derivative=2)
    mo_lap = C.T @ ao_lap

    phi_max = float(np.max(np.abs(mo)))
    grad_norm = np.linalg.norm(mo_grad, axis=2)
    phi_prime_max = float(np.max(grad_norm))
    lap_max = float(np.max(np.abs(mo_lap)))

    centroid = coords.mean(axis=0)
    radii = np.linalg.norm(points - centroid, axis=1)
    amp = np.max(np.abs(mo), axis=0)
    significant = amp > 1e-3 * phi_max
    x_max = float(radii[significant].max()) if significant.any() else 1.0

    far = radii > x_max * 0.8
    alphas = []
    with np.errstate(divide="ignore"):
        for r, a in zip(radii[far], amp[far]):
            if a <= 0 or r <= 0:
                continue
            ratio = a / phi_max
            if ratio < 1.0:
                alphas.append(-math.log(ratio) * x_max / r)
    alpha = min(alphas) if alphas else 1.0
    alpha = min(max(alpha, 0.5), 10.0)

    gamma1 = max(phi_prime_max * x_max / phi_max, 0.1)
    gamma2 = max(lap_max * x_max ** 2 / phi_max, 0.1)
    return {"phi_max": phi_max, "phi_prime_max": phi_prime_max,
            "x_max_bohr": x_max, "alpha_ci": alpha,
            "gamma1_ci": gamma1, "gamma2_ci": gamma2}


def extract(req: ExtractionRequest) -> dict:
    """Run the full pipeline and return the parameter record as a dict."""
    if req.geometry_xyz is not None:
        symbols, coords, mult = parse_xyz(req.geometry_xyz)
    else:
        symbols, coords, mult = lookup(req.molecule)
    if req.multiplicity is not None:
        mult = req.multiplicity
    scf = run_scf(symbols, coords, charge=req.charge, multiplicity=mult,
                  basis=req.basis)
    h_mo, eri_mo = mo_integrals(scf)
    t_eff, v = chemist_coefficients(h_mo, eri_mo)
    norms = coefficient_norms(t_eff, v, req.rank_cutoff)
    extents = orbital_extent_constants(scf)

    n_mo = h_mo.shape[0]
    record = {
        "name": req.molecule.lower(),
        "basis": req.basis.lower(),
        "N": 2 * n_mo,
        "eta": scf.n_electrons,
        "lambda_value": norms["lambda_value"],
        "Lambda_max": norms["Lambda_max"],
        "Gamma": norms["Gamma"],
        "J": len(symbols),
        "charges": [float(z) for z in scf.charges],
        "phi_max": extents["phi_max"],
        "phi_prime_max": extents["phi_prime_max"],
        "alpha_ci": extents["alpha_ci"],
        "gamma1_ci": extents["gamma1_ci"],
        "gamma2_ci": extents["gamma2_ci"],
        "L_rank": norms["L_rank"],
        "H_norm_bound": 0.5 * norms["lambda_value"],
        "basis_contraction_d": 6,
        "metadata": {
            "scf_energy_hartree": scf.energy,
            "scf_treatment": ("restricted closed-shell" if mult == 1 else
                              "restricted spin-averaged open-shell"),
            "lambda_convention": (
                "one-norm of the factorized chemist-ordered coefficients: "
                "2*sum|T_pq| + 0.5*sum_l |w_l| (sum_pq |g_pq|)^2"),
            "lambda_T": norms["lambda_T"],
            "lambda_V": norms["lambda_V"],
            "coefficient_floor": COEFF_FLOOR,
            "rank_cutoff": req.rank_cutoff,
            "orbital_extent_bohr": extents["x_max_bohr"],
            "h_norm_convention": "placeholder frustration ratio 0.5*lambda",
            "extent_constants": ("dense grid sampling of all molecular "
                                 "orbitals, values and analytic first and "
                                 "second derivatives, spacing 0.3 bohr"),
        },
    }
    if req.cell_volume is not None:
        record["Omega"] = req.cell_volume
    if req.ao_labels:
        record["metadata"]["ao_labels"] = list(req.ao_labels)
        record["metadata"]["active_space_note"] = (
            "orbital-label active-space restriction is accepted for "
            "interface compatibility but not applied by this backend")
    return record


def write_record(record: dict, out_dir: str | Path) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{record['name']}_{record['basis']}.json"
    path.write_text(json.dumps(record, indent=2, sort_keys=True) + "\n")
    return path
