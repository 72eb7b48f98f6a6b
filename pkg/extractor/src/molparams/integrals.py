"""One- and two-electron integrals over contracted Cartesian Gaussians.

Hermite-expansion (McMurchie-Davidson) scheme: products of Cartesian
Gaussians are expanded in Hermite Gaussians (E coefficients), Coulomb
integrals reduce to the Hermite integral tensor R built on the Boys
function. Covers any angular momentum; the bundled basis uses s and p.
"""
from __future__ import annotations

import math

import numpy as np
from scipy.special import hyp1f1

from .basis631g import ContractedGaussian


def boys_array(n_max: int, T: float) -> list[float]:
    """F_0..F_n via one confluent-hypergeometric call and downward recursion."""
    out = [0.0] * (n_max + 1)
    out[n_max] = float(hyp1f1(n_max + 0.5, n_max + 1.5, -T)) / (2 * n_max + 1)
    if n_max:
        expT = math.exp(-T)
        for n in range(n_max - 1, -1, -1):
            out[n] = (2 * T * out[n + 1] + expT) / (2 * n + 1)
    return out


def hermite_expansion_table(i_max: int, j_max: int, a: float, b: float,
                            Qx: float) -> np.ndarray:
    """E[t, i, j] coefficients for one Cartesian direction."""
    p = a + b
    q = a * b / p
    E = np.zeros((i_max + j_max + 1, i_max + 1, j_max + 1))
    E[0, 0, 0] = math.exp(-q * Qx * Qx)
    for i in range(1, i_max + 1):
        for t in range(i + 1):
            val = 0.0
            if t > 0:
                val += E[t - 1, i - 1, 0] / (2 * p)
            val -= (q * Qx / a) * E[t, i - 1, 0]
            if t + 1 <= i - 1:
                val += (t + 1) * E[t + 1, i - 1, 0]
            E[t, i, 0] = val
    for j in range(1, j_max + 1):
        for i in range(i_max + 1):
            for t in range(i + j + 1):
                val = 0.0
                if t > 0:
                    val += E[t - 1, i, j - 1] / (2 * p)
                val += (q * Qx / b) * E[t, i, j - 1]
                if t + 1 <= i + j - 1:
                    val += (t + 1) * E[t + 1, i, j - 1]
                E[t, i, j] = val
    return E


def _overlap_1d(E: np.ndarray, i: int, j: int, p: float) -> float:
    return E[0, i, j] * math.sqrt(math.pi / p)


def _primitive_overlap(a, powers_a, A, b, powers_b, B):
    p = a + b
    s = 1.0
    for d in range(3):
        E = hermite_expansion_table(powers_a[d], powers_b[d], a, b,
                                    A[d] - B[d])
        s *= _overlap_1d(E, powers_a[d], powers_b[d], p)
    return s


def _primitive_kinetic(a, powers_a, A, b, powers_b, B):
    p = a + b
    S = [0.0] * 3
    K = [0.0] * 3
    for d in range(3):
        i, j = powers_a[d], powers_b[d]
        E = hermite_expansion_table(i, j + 2, a, b, A[d] - B[d])
        s = _overlap_1d(E, i, j, p)
        s_plus2 = _overlap_1d(E, i, j + 2, p)
        s_minus2 = _overlap_1d(E, i, j - 2, p) if j >= 2 else 0.0
        S[d] = s
        K[d] = (-2.0 * b * b * s_plus2 + b * (2 * j + 1) * s
                - 0.5 * j * (j - 1) * s_minus2)
    return (K[0] * S[1] * S[2] + S[0] * K[1] * S[2] + S[0] * S[1] * K[2])


def hermite_coulomb_tensor(t_max, u_max, v_max, p, PC) -> np.ndarray:
    """R[t, u, v] Hermite Coulomb integrals at auxiliary order zero."""
    n_total = t_max + u_max + v_max
    T = p * float(PC @ PC)
    boys = boys_array(n_total, T)
    # R^n stored as dict over n of (t,u,v) arrays, built bottom-up in n
    R = np.zeros((n_total + 1, t_max + 1, u_max + 1, v_max + 1))
    for n in range(n_total + 1):
        R[n, 0, 0, 0] = (-2.0 * p) ** n * boys[n]
    for t in range(1, t_max + 1):
        for n in range(n_total - t + 1):
            val = PC[0] * R[n + 1, t - 1, 0, 0]
            if t > 1:
                val += (t - 1) * R[n + 1, t - 2, 0, 0]
            R[n, t, 0, 0] = val
    for u in range(1, u_max + 1):
        for t in range(t_max + 1):
            for n in range(n_total - t - u + 1):
                val = PC[1] * R[n + 1, t, u - 1, 0]
                if u > 1:
                    val += (u - 1) * R[n + 1, t, u - 2, 0]
                R[n, t, u, 0] = val
    for v in range(1, v_max + 1):
        for u in range(u_max + 1):
            for t in range(t_max + 1):
                for n in range(n_total - t - u - v + 1):
                    val = PC[2] * R[n + 1, t, u, v - 1]
                    if v > 1:
                        val += (v - 1) * R[n + 1, t, u, v - 2]
                    R[n, t, u, v] = val
    return R[0]


class _PairData:
    """Precomputed primitive-pair quantities for one function pair."""
    __slots__ = ("p", "P", "coeff", "Ex", "Ey", "Ez", "L")

    def __init__(self, p, P, coeff, Ex, Ey, Ez, L):
        self.p, self.P, self.coeff = p, P, coeff
        self.Ex, self.Ey, self.Ez, self.L = Ex, Ey, Ez, L


def _pair_list(fa: ContractedGaussian, fb: ContractedGaussian):
    pairs = []
    ia, ja, ka = fa.powers
    ib, jb, kb = fb.powers
    AB = fa.center - fb.center
    for a, ca in zip(fa.exponents, fa.coefficients):
        for b, cb in zip(fb.exponents, fb.coefficients):
            p = a + b
            P = (a * fa.center + b * fb.center) / p
            Ex = hermite_expansion_table(ia, ib, a, b, AB[0])[:, ia, ib]
            Ey = hermite_expansion_table(ja, jb, a, b, AB[1])[:, ja, jb]
            Ez = hermite_expansion_table(ka, kb, a, b, AB[2])[:, ka, kb]
            coeff = ca * cb
            if coeff == 0.0 or not (np.any(Ex) and np.any(Ey) and np.any(Ez)):
                continue
            pairs.append(_PairData(p, P, coeff, Ex, Ey, Ez,
                                   (ia + ib, ja + jb, ka + kb)))
    return pairs


def overlap_matrix(basis) -> np.ndarray:
    n = len(basis)
    S = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            val = 0.0
            for a, ca in zip(basis[i].exponents, basis[i].coefficients):
                for b, cb in zip(basis[j].exponents, basis[j].coefficients):
                    val += ca * cb * _primitive_overlap(
                        a, basis[i].powers, basis[i].center,
                        b, basis[j].powers, basis[j].center)
            S[i, j] = S[j, i] = val
    return S


def kinetic_matrix(basis) -> np.ndarray:
    n = len(basis)
    T = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            val = 0.0
            for a, ca in zip(basis[i].exponents, basis[i].coefficients):
                for b, cb in zip(basis[j].exponents, basis[j].coefficients):
                    val += ca * cb * _primitive_kinetic(
                        a, basis[i].powers, basis[i].center,
                        b, basis[j].powers, basis[j].center)
            T[i, j] = T[j, i] = val
    return T


def nuclear_attraction_matrix(basis, charges, centers) -> np.ndarray:
    n = len(basis)
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            val = 0.0
            for pair in _pair_list(basis[i], basis[j]):
                tx, ty, tz = pair.L
                for Z, C in zip(charges, centers):
                    R = hermite_coulomb_tensor(tx, ty, tz, pair.p,
                                               pair.P - C)
                    acc = 0.0
                    for t in range(tx + 1):
                        for u in range(ty + 1):
                            for v in range(tz + 1):
                                acc += (pair.Ex[t] * pair.Ey[u] * pair.Ez[v]
                                        * R[t, u, v])
                    val -= Z * pair.coeff * (2 * math.pi / pair.p) * acc
            V[i, j] = V[j, i] = val
    return V


def _contract_hermite(bra: _PairData, ket: _PairData) -> float:
    alpha = bra.p * ket.p / (bra.p + ket.p)
    PQ = bra.P - ket.P
    tx1, ty1, tz1 = bra.L
    tx2, ty2, tz2 = ket.L
    R = hermite_coulomb_tensor(tx1 + tx2, ty1 + ty2, tz1 + tz2, alpha, PQ)
    total = 0.0
    for t1 in range(tx1 + 1):
        if bra.Ex[t1] == 0.0:
            continue
        for u1 in range(ty1 + 1):
            for v1 in range(tz1 + 1):
                e_bra = bra.Ex[t1] * bra.Ey[u1] * bra.Ez[v1]
                if e_bra == 0.0:
                    continue
                for t2 in range(tx2 + 1):
                    for u2 in range(ty2 + 1):
                        for v2 in range(tz2 + 1):
                            e_ket = (ket.Ex[t2] * ket.Ey[u2] * ket.Ez[v2])
                            if e_ket == 0.0:
                                continue
                            sign = -1.0 if (t2 + u2 + v2) % 2 else 1.0
                            total += (e_bra * e_ket * sign
                                      * R[t1 + t2, u1 + u2, v1 + v2])
    pref = 2 * math.pi ** 2.5 / (bra.p * ket.p
                                 * math.sqrt(bra.p + ket.p))
    return pref * total * bra.coeff * ket.coeff


def electron_repulsion_tensor(basis) -> np.ndarray:
    """(ij|kl) in chemist notation with full 8-fold symmetry."""
    n = len(basis)
    pair_cache = {}

    def pairs(i, j):
        key = (i, j)
        if key not in pair_cache:
            pair_cache[key] = _pair_list(basis[i], basis[j])
        return pair_cache[key]

    eri = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(i + 1):
            ij = i * (i + 1) // 2 + j
            for k in range(n):
                for l in range(k + 1):
                    kl = k * (k + 1) // 2 + l
                    if ij < kl:
                        continue
                    val = 0.0
                    for bra in pairs(i, j):
                        for ket in pairs(k, l):
                            val += _contract_hermite(bra, ket)
                    for a, b in ((i, j), (j, i)):
                        for c, d in ((k, l), (l, k)):
                            eri[a, b, c, d] = eri[c, d, a, b] = val
    return eri


def nuclear_repulsion(charges, centers) -> float:
    total = 0.0
    for i in range(len(charges)):
        for j in range(i):
            total += charges[i] * charges[j] / float(
                np.linalg.norm(np.asarray(centers[i]) - np.asarray(centers[j])))
    return total
