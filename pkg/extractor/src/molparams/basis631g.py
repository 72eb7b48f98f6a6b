"""Built-in 6-31G basis data for the light main-group elements.

Shells are (angular momentum letter, [(exponent, coeff), ...]) with SP
shells split into their s and p parts at load time. Coefficients are the
published contraction values; primitive and contracted normalisation are
applied when shells are instantiated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

ATOMIC_NUMBER = {"H": 1, "C": 6, "N": 7, "O": 8, "F": 9, "Na": 11, "Cl": 17}

# element -> list of ("S"|"SP", [(exponent, s-coeff) or (exponent, s, p)])
BASIS_631G: dict[str, list] = {
    "H": [
        ("S", [(18.7311370, 0.03349460), (2.8253937, 0.23472695),
               (0.6401217, 0.81375733)]),
        ("S", [(0.1612778, 1.0)]),
    ],
    "C": [
        ("S", [(3047.5249, 0.0018347), (457.36951, 0.0140373),
               (103.94869, 0.0688426), (29.210155, 0.2321844),
               (9.2866630, 0.4679413), (3.1639270, 0.3623120)]),
        ("SP", [(7.8682724, -0.1193324, 0.0689991),
                (1.8812885, -0.1608542, 0.3164240),
                (0.5442493, 1.1434564, 0.7443083)]),
        ("SP", [(0.1687144, 1.0, 1.0)]),
    ],
    "N": [
        ("S", [(4173.5110, 0.0018348), (627.45791, 0.0139950),
               (142.90209, 0.0685870), (40.234233, 0.2322410),
               (12.820213, 0.4690700), (4.3904370, 0.3604550)]),
        ("SP", [(11.626358, -0.1149610, 0.0675800),
                (2.7162800, -0.1691180, 0.3239070),
                (0.7722180, 1.1458520, 0.7408950)]),
        ("SP", [(0.2120313, 1.0, 1.0)]),
    ],
    "O": [
        ("S", [(5484.6717, 0.0018311), (825.23495, 0.0139501),
               (188.04696, 0.0684451), (52.964500, 0.2327143),
               (16.897570, 0.4701930), (5.7996353, 0.3585209)]),
        ("SP", [(15.539616, -0.1107775, 0.0708743),
                (3.5999336, -0.1480263, 0.3397528),
                (1.0137618, 1.1307670, 0.7271586)]),
        ("SP", [(0.2700058, 1.0, 1.0)]),
    ],
    "F": [
        ("S", [(7001.7131, 0.0018196), (1051.3660, 0.0139160),
               (239.28569, 0.0684053), (67.397445, 0.2331857),
               (21.519957, 0.4712674), (7.4031013, 0.3566185)]),
        ("SP", [(20.847952, -0.1085070, 0.0716287),
                (4.8083083, -0.1464517, 0.3459121),
                (1.3440699, 1.1286886, 0.7224700)]),
        ("SP", [(0.3581514, 1.0, 1.0)]),
    ],
    "Na": [
        ("S", [(9993.2000, 0.0019377), (1499.8900, 0.0148070),
               (341.95100, 0.0727060), (94.679700, 0.2526290),
               (29.734500, 0.4932420), (10.006300, 0.3131690)]),
        ("SP", [(150.96300, -0.0035421, 0.0050017),
                (35.587800, -0.0439590, 0.0355110),
                (11.168300, -0.1097521, 0.1428250),
                (3.9020100, 0.1873980, 0.3386200),
                (1.3817700, 0.6466990, 0.4515790),
                (0.4663820, 0.3060580, 0.2732710)]),
        ("SP", [(0.4979660, -0.2485030, -0.0230230),
                (0.0843530, -0.1312080, 0.9503590),
                (0.0666350, 1.2335200, 0.0598580)]),
        ("SP", [(0.0259544, 1.0, 1.0)]),
    ],
    "Cl": [
        ("S", [(25180.100, 0.0018330), (3780.3500, 0.0140340),
               (860.47400, 0.0690970), (242.14500, 0.2326700),
               (77.334900, 0.4689980), (26.247000, 0.3565930)]),
        ("SP", [(491.76500, -0.0022974, 0.0039894),
                (116.98400, -0.0307140, 0.0303180),
                (37.415300, -0.1125280, 0.1298800),
                (13.783400, 0.0450160, 0.3279510),
                (5.4521500, 0.5893530, 0.4535270),
                (2.2258800, 0.4652060, 0.2521540)]),
        ("SP", [(3.1864900, -0.2518300, -0.0142990),
                (1.1442700, 0.0615890, 0.3235720),
                (0.4203770, 1.0601800, 0.7435070)]),
        ("SP", [(0.1426570, 1.0, 1.0)]),
    ],
}


@dataclass
class ContractedGaussian:
    """One Cartesian contracted Gaussian basis function."""
    center: np.ndarray          # (3,) bohr
    powers: tuple[int, int, int]
    exponents: np.ndarray
    coefficients: np.ndarray    # includes all normalisation

    @property
    def total_angular_momentum(self) -> int:
        return sum(self.powers)


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def primitive_norm(alpha: float, powers) -> float:
    i, j, k = powers
    l = i + j + k
    pre = (2 * alpha / math.pi) ** 0.75 * (4 * alpha) ** (l / 2)
    denom = math.sqrt(_double_factorial(2 * i - 1)
                      * _double_factorial(2 * j - 1)
                      * _double_factorial(2 * k - 1))
    return pre / denom


def _contracted_self_overlap(exponents, coeffs, powers) -> float:
    i, j, k = powers
    l = i + j + k
    dfact = (_double_factorial(2 * i - 1) * _double_factorial(2 * j - 1)
             * _double_factorial(2 * k - 1))
    total = 0.0
    for a, ca in zip(exponents, coeffs):
        for b, cb in zip(exponents, coeffs):
            p = a + b
            total += (ca * cb * dfact * (math.pi / p) ** 1.5
                      / (2 * p) ** l)
    return total


def build_shell(center, powers, primitives) -> ContractedGaussian:
    exps = np.array([p[0] for p in primitives])
    raw = np.array([p[1] for p in primitives])
    coeffs = np.array([c * primitive_norm(a, powers)
                       for a, c in zip(exps, raw)])
    norm = _contracted_self_overlap(exps, coeffs, powers)
    coeffs /= math.sqrt(norm)
    return ContractedGaussian(center=np.asarray(center, float),
                              powers=powers, exponents=exps,
                              coefficients=coeffs)


P_POWERS = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


# minimal basis, bundled for degenerate single-atom checks
BASIS_STO3G: dict[str, list] = {
    "H": [
        ("S", [(3.42525091, 0.15432897), (0.62391373, 0.53532814),
               (0.16885540, 0.44463454)]),
    ],
}

_TABLES = {"631g": BASIS_631G, "sto3g": BASIS_STO3G}


def basis_for_molecule(symbols, coords, basis: str = "6-31g"):
    """Contracted-Gaussian list for a molecule; coords in bohr."""
    key = basis.lower().replace("-", "")
    if key not in _TABLES:
        raise ValueError(
            f"unknown basis {basis!r} (built-in: 6-31G, STO-3G for H)")
    table = _TABLES[key]
    functions: list[ContractedGaussian] = []
    for symbol, center in zip(symbols, coords):
        if symbol not in table:
            raise ValueError(f"no {basis} data for element {symbol!r}")
        for kind, prims in table[symbol]:
            functions.append(build_shell(
                center, (0, 0, 0), [(p[0], p[1]) for p in prims]))
            if kind == "SP":
                for powers in P_POWERS:
                    functions.append(build_shell(
                        center, powers, [(p[0], p[2]) for p in prims]))
    return functions
