"""Built-in equilibrium geometries (angstrom) for the bundled molecules.

The sandbox has no compound-database access, so name lookup resolves
against this table; explicit XYZ input covers everything else.
"""
import numpy as np

ANGSTROM_TO_BOHR = 1.8897259886

GEOMETRIES: dict[str, list[tuple[str, tuple[float, float, float]]]] = {
    "h": [("H", (0.0, 0.0, 0.0))],
    "h2": [("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, 0.7414))],
    "hf": [("H", (0.0, 0.0, 0.0)), ("F", (0.0, 0.0, 0.9168))],
    "h2o": [("O", (0.0, 0.0, 0.1173)),
            ("H", (0.0, 0.7572, -0.4692)),
            ("H", (0.0, -0.7572, -0.4692))],
    "nh3": [("N", (0.0, 0.0, 0.1173)),
            ("H", (0.0, 0.9377, -0.2738)),
            ("H", (0.8121, -0.4689, -0.2738)),
            ("H", (-0.8121, -0.4689, -0.2738))],
    "ch4": [("C", (0.0, 0.0, 0.0)),
            ("H", (0.6276, 0.6276, 0.6276)),
            ("H", (0.6276, -0.6276, -0.6276)),
            ("H", (-0.6276, 0.6276, -0.6276)),
            ("H", (-0.6276, -0.6276, 0.6276))],
    "o2": [("O", (0.0, 0.0, 0.0)), ("O", (0.0, 0.0, 1.2075))],
    "co2": [("C", (0.0, 0.0, 0.0)),
            ("O", (0.0, 0.0, 1.1600)),
            ("O", (0.0, 0.0, -1.1600))],
    "nacl": [("Na", (0.0, 0.0, 0.0)), ("Cl", (0.0, 0.0, 2.3609))],
}

# nonzero values force an open-shell (spin-averaged) treatment
MULTIPLICITY = {"h": 2, "o2": 3}


def lookup(name: str):
    """(symbols, coords in bohr, spin multiplicity) for a bundled molecule."""
    key = name.lower()
    if key not in GEOMETRIES:
        raise KeyError(
            f"no built-in geometry for {name!r}; bundled molecules: "
            + ", ".join(sorted(GEOMETRIES)))
    entries = GEOMETRIES[key]
    symbols = [sym for sym, _ in entries]
    coords = np.array([xyz for _, xyz in entries]) * ANGSTROM_TO_BOHR
    return symbols, coords, MULTIPLICITY.get(key, 1)


def parse_xyz(text: str):
    """Parse simple XYZ content (symbol x y z per line, angstrom)."""
    symbols, rows = [], []
    for line in text.strip().splitlines():
        parts = line.split()
        if len(parts) != 4:
            continue
        symbols.append(parts[0])
        rows.append([float(x) for x in parts[1:]])
    if not symbols:
        raise ValueError("no atoms found in XYZ input")
    return symbols, np.array(rows) * ANGSTROM_TO_BOHR, 1
