"""Restricted self-consistent field with DIIS.

Closed shells use standard RHF. Open shells use a spin-averaged restricted
treatment: singly occupied orbitals carry fractional occupation in the
density, with the closed-shell Fock form applied to the averaged density.
That is sufficient for the coefficient-norm extraction done here and is
recorded in the emitted metadata.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import integrals
from .basis631g import ATOMIC_NUMBER, basis_for_molecule


class SCFError(RuntimeError):
    pass


@dataclass
class SCFResult:
    energy: float
    mo_coefficients: np.ndarray   # (n_ao, n_mo)
    mo_energies: np.ndarray
    occupations: np.ndarray       # per spatial orbital, in [0, 2]
    core_hamiltonian: np.ndarray
    eri: np.ndarray               # (ij|kl), chemist
    overlap: np.ndarray
    nuclear_repulsion: float
    n_electrons: int
    basis: list
    symbols: list
    coords: np.ndarray
    charges: list


def occupation_vector(n_electrons: int, multiplicity: int,
                      n_mo: int) -> np.ndarray:
    n_open = multiplicity - 1
    n_paired = (n_electrons - n_open) // 2
    if n_paired < 0 or n_paired + n_open > n_mo:
        raise SCFError(
            f"cannot occupy {n_electrons} electrons (multiplicity "
            f"{multiplicity}) in {n_mo} orbitals")
    occ = np.zeros(n_mo)
    occ[:n_paired] = 2.0
    occ[n_paired:n_paired + n_open] = 1.0
    return occ


def run_scf(symbols, coords, charge: int = 0, multiplicity: int = 1,
            basis: str = "6-31g", max_iter: int = 200,
            conv: float = 1e-9) -> SCFResult:
    """Converge the restricted SCF and return everything downstream needs."""
    charges = [ATOMIC_NUMBER[s] for s in symbols]
    n_electrons = sum(charges) - charge
    functions = basis_for_molecule(symbols, coords, basis)
    n_ao = len(functions)

    S = integrals.overlap_matrix(functions)
    T = integrals.kinetic_matrix(functions)
    V = integrals.nuclear_attraction_matrix(functions, charges, coords)
    eri = integrals.electron_repulsion_tensor(functions)
    h_core = T + V
    e_nuc = integrals.nuclear_repulsion(charges, coords)

    occ = occupation_vector(n_electrons, multiplicity, n_ao)

    s_val, s_vec = np.linalg.eigh(S)
    if s_val.min() < 1e-10:
        raise SCFError("overlap matrix is numerically singular")
    X = s_vec @ np.diag(s_val ** -0.5) @ s_vec.T

    def density(C):
        return (C * occ) @ C.T

    def fock(D):
        J = np.einsum("pqrs,rs->pq", eri, D)
        K = np.einsum("prqs,rs->pq", eri, D)
        return h_core + J - 0.5 * K

    def energy(D, F):
        return 0.5 * float(np.sum(D * (h_core + F))) + e_nuc

    # core guess
    Fp = X.T @ h_core @ X
    eps, Cp = np.linalg.eigh(Fp)
    C = X @ Cp
    D = density(C)
    e_old = 0.0
    diis_f, diis_e = [], []
    for iteration in range(max_iter):
        F = fock(D)
        err = F @ D @ S - S @ D @ F
        diis_f.append(F)
        diis_e.append(err)
        if len(diis_f) > 8:
            diis_f.pop(0)
            diis_e.pop(0)
        if len(diis_f) > 1:
            m = len(diis_f)
            B = -np.ones((m + 1, m + 1))
            B[m, m] = 0.0
            for a in range(m):
                for b in range(m):
                    B[a, b] = float(np.sum(diis_e[a] * diis_e[b]))
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                weights = np.linalg.solve(B, rhs)[:m]
                F = sum(w * f for w, f in zip(weights, diis_f))
            except np.linalg.LinAlgError:
                pass
        Fp = X.T @ F @ X
        eps, Cp = np.linalg.eigh(Fp)
        C = X @ Cp
        D = density(C)
        e_new = energy(D, fock(D))
        if abs(e_new - e_old) < conv and iteration > 1:
            return SCFResult(
                energy=e_new, mo_coefficients=C, mo_energies=eps,
                occupations=occ, core_hamiltonian=h_core, eri=eri,
                overlap=S, nuclear_repulsion=e_nuc,
                n_electrons=n_electrons, basis=functions, symbols=symbols,
                coords=np.asarray(coords), charges=charges)
        e_old = e_new
    raise SCFError(f"SCF failed to converge in {max_iter} iterations")
