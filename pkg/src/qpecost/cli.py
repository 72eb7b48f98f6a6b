"""Command-line pipeline: load a molecule record, pick a method, optimize
the error split, and report the median T-count and synthesis time.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib import resources
from pathlib import Path

from .config import RunConfig, load_run_config
from .errors import (ErrorBudget, InfeasibleBudgetError, OptimizerConfig,
                     optimize_allocation)
from .methods import get_method, method_names
from .molecule import (MolecularParams, SchemaError, derive_plane_wave_count,
                       load_params)
from .surface import synthesis_time


class InputError(ValueError):
    """Bad user input: missing file, unknown method, malformed config."""


@dataclasses.dataclass
class RunReport:
    molecule: str
    method: str
    median_t_count: int
    min_t_count: int
    max_t_count: int
    best_allocation: dict
    synthesis_time_seconds: float
    constants: dict
    seed: int
    trials: int
    plane_wave_orbitals: int | None = None
    # orbital labels are carried through for the extraction tool only;
    # the cost engine never interprets them
    ao_labels: list[str] | None = None

    def __post_init__(self):
        if not (self.min_t_count <= self.median_t_count <= self.max_t_count):
            raise ValueError("median must lie between min and max")

    def to_text(self) -> str:
        lines = [
            f"molecule:        {self.molecule}",
            f"method:          {self.method}",
            f"median T-count:  {self.median_t_count:.1e}",
            f"trial spread:    {self.min_t_count:.1e} .. {self.max_t_count:.1e}",
            f"synthesis time:  {self.synthesis_time_seconds:.1e} s",
            f"trials / seed:   {self.trials} / {self.seed}",
        ]
        if self.plane_wave_orbitals:
            lines.append(f"plane waves:     {self.plane_wave_orbitals}")
        alloc = ", ".join(f"{k}={v:.2e}" for k, v in
                          self.best_allocation.items() if v)
        lines.append(f"best allocation: {alloc}")
        consts = ", ".join(f"{k}={_fmt(v)}" for k, v in self.constants.items())
        if consts:
            lines.append(f"derived:         {consts}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), indent=2, sort_keys=True,
                          default=str)


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.3g}"
    return str(v)


def find_params_file(molecule: str, cfg: RunConfig) -> Path:
    """Resolve `<molecule>_<basis>.json` in the configured search path.

    Falls back to a unique `<molecule>_*.json` match so records carrying
    their own basis label (like the bundled cofactor active space) resolve
    by molecule name alone.
    """
    fname = f"{molecule}_{cfg.basis}.json"
    search_dirs = []
    if cfg.params_dir:
        search_dirs.append(Path(cfg.params_dir))
    search_dirs.append(Path.cwd())
    for directory in search_dirs:
        if (directory / fname).exists():
            return directory / fname
    packaged = resources.files("qpecost") / "fixtures"
    if (packaged / fname).is_file():
        with resources.as_file(packaged / fname) as p:
            return Path(p)
    loose = []
    for directory in search_dirs:
        loose += sorted(directory.glob(f"{molecule}_*.json"))
    loose += sorted(p for p in packaged.iterdir()
                    if p.name.startswith(f"{molecule}_")
                    and p.name.endswith(".json"))
    if len(loose) == 1:
        with resources.as_file(loose[0]) as p:
            return Path(p)
    if len(loose) > 1:
        raise InputError(
            f"molecule {molecule!r} is ambiguous without a basis: found "
            + ", ".join(p.name for p in loose))
    raise InputError(
        f"no parameter file for molecule {molecule!r}: expected {fname} in "
        + ", ".join(str(d) for d in search_dirs) + " or the packaged fixtures")


def prepare_params(params: MolecularParams, method: str,
                   cfg: RunConfig) -> tuple[MolecularParams, int | None]:
    """Swap in the plane-wave orbital count when the method needs it."""
    spec = get_method(method)
    if not spec.needs_plane_waves:
        return params, None
    n_pw = derive_plane_wave_count(params.N, cfg.plane_wave_multiplier)
    return params.with_plane_wave_count(n_pw), n_pw


def run(molecule: str, method: str, cfg: RunConfig,
        ao_labels: list[str] | None = None) -> RunReport:
    """End-to-end estimate for one (molecule, method) pair."""
    if method not in method_names():
        raise InputError(
            f"unknown method {method!r}; valid methods: "
            + ", ".join(method_names()))
    params = load_params(find_params_file(molecule, cfg))
    params, n_pw = prepare_params(params, method, cfg)
    budget = ErrorBudget(total=cfg.budget_total)
    opt_cfg = OptimizerConfig(trials=cfg.trials, seed=cfg.seed)
    result = optimize_allocation(method, params, budget, opt_cfg,
                                 cfg.cost_model())
    bd = result.best_breakdown
    constants = {"r": bd.r}
    for name in ("K", "M", "mu", "zeta", "M0_bits"):
        value = getattr(bd, name)
        if value is not None:
            constants[name] = value
    constants.update(bd.constants)
    return RunReport(
        molecule=molecule, method=method,
        median_t_count=result.median,
        min_t_count=min(result.t_counts),
        max_t_count=max(result.t_counts),
        best_allocation=dataclasses.asdict(result.best_allocation),
        synthesis_time_seconds=synthesis_time(result.median,
                                              cfg.cost_model().surface),
        constants=constants, seed=cfg.seed, trials=cfg.trials,
        plane_wave_orbitals=n_pw, ao_labels=ao_labels)


def run_matrix(molecules: list[str], methods: list[str],
               cfg: RunConfig) -> list[dict]:
    """One row per (molecule, method); failures recorded in-row."""
    cells = [(mol, meth) for mol in molecules for meth in methods]

    def cell(args):
        mol, meth = args
        try:
            report = run(mol, meth, cfg)
            return {"molecule": mol, "method": meth,
                    "median_t_count": report.median_t_count,
                    "synthesis_time_seconds": report.synthesis_time_seconds,
                    "error": ""}
        except Exception as exc:
            return {"molecule": mol, "method": meth, "median_t_count": "",
                    "synthesis_time_seconds": "", "error": str(exc)}

    with ThreadPoolExecutor(max_workers=min(8, max(1, len(cells)))) as pool:
        rows = list(pool.map(cell, cells))
    return rows


def _write_csv(rows: list[dict], path) -> None:
    writer = csv.DictWriter(path, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    writer.writerows(rows)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="qpecost",
        description="T-gate cost estimates for quantum phase estimation "
                    "algorithms on molecular inputs")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="estimate one molecule/method pair")
    p_run.add_argument("molecule")
    p_run.add_argument("method")
    p_run.add_argument("--config", default=None)
    p_run.add_argument("--seed", type=int, default=None)
    p_run.add_argument("--trials", type=int, default=None)
    p_run.add_argument("--params-dir", default=None)
    p_run.add_argument("--ao-labels", nargs="*", default=None,
                       help="orbital labels forwarded to the extraction "
                            "tool; not interpreted here")
    p_run.add_argument("--json", action="store_true", dest="as_json")

    p_mat = sub.add_parser("matrix", help="batch estimates as a CSV table")
    p_mat.add_argument("--molecules", required=True)
    p_mat.add_argument("--methods", required=True)
    p_mat.add_argument("--config", default=None)
    p_mat.add_argument("--seed", type=int, default=None)
    p_mat.add_argument("--trials", type=int, default=None)
    p_mat.add_argument("--params-dir", default=None)
    p_mat.add_argument("--csv", default=None)
    p_mat.add_argument("--plot-json", default=None,
                       help="write per-molecule method medians as grouped "
                            "series (basis-comparison plot data)")

    args = parser.parse_args(argv)
    try:
        cfg = load_run_config(args.config)
    except (FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.seed is not None:
        cfg.seed = args.seed
    if args.trials is not None:
        cfg.trials = args.trials
    if args.params_dir is not None:
        cfg.params_dir = args.params_dir

    try:
        if args.command == "run":
            report = run(args.molecule, args.method, cfg,
                         ao_labels=args.ao_labels)
            print(report.to_json() if args.as_json else report.to_text())
        else:
            molecules = [m for m in args.molecules.split(",") if m]
            methods = [m for m in args.methods.split(",") if m]
            for meth in methods:
                if meth not in method_names():
                    raise InputError(
                        f"unknown method {meth!r}; valid methods: "
                        + ", ".join(method_names()))
            rows = run_matrix(molecules, methods, cfg)
            if args.csv:
                with open(args.csv, "w", newline="") as fh:
                    _write_csv(rows, fh)
            else:
                _write_csv(rows, sys.stdout)
            if args.plot_json:
                series: dict[str, dict] = {}
                for row in rows:
                    series.setdefault(row["molecule"], {})[row["method"]] = (
                        row["median_t_count"])
                Path(args.plot_json).write_text(
                    json.dumps(series, indent=2, sort_keys=True) + "\n")
    except (InputError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InfeasibleBudgetError, ValueError, RuntimeError) as exc:
        print(f"infeasible estimate: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
