"""Command-line entry points: extract parameter files, verify schemas."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .extract import ExtractionRequest, extract, write_record
from .verify import verify_schema


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="molparams",
        description="Produce cost-engine parameter files from molecular "
                    "geometry with the built-in Hartree-Fock backend")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ext = sub.add_parser("extract", help="extract one molecule")
    p_ext.add_argument("molecule", help="built-in molecule name")
    p_ext.add_argument("--basis", default="6-31G")
    p_ext.add_argument("--xyz", default=None,
                       help="path to an XYZ file overriding the built-in "
                            "geometry (angstrom)")
    p_ext.add_argument("--charge", type=int, default=0)
    p_ext.add_argument("--multiplicity", type=int, default=None)
    p_ext.add_argument("--ao-labels", nargs="*", default=None)
    p_ext.add_argument("--cell-volume", type=float, default=None,
                       help="computational cell volume (bohr^3) to embed "
                            "for plane-wave estimators")
    p_ext.add_argument("--rank-cutoff", type=float, default=1e-8)
    p_ext.add_argument("--out", default=".", help="output directory")

    p_ver = sub.add_parser("verify", help="validate parameter files")
    p_ver.add_argument("paths", nargs="+")

    args = parser.parse_args(argv)
    if args.command == "extract":
        geometry = Path(args.xyz).read_text() if args.xyz else None
        req = ExtractionRequest(
            molecule=args.molecule, basis=args.basis,
            geometry_xyz=geometry, charge=args.charge,
            multiplicity=args.multiplicity, ao_labels=args.ao_labels,
            cell_volume=args.cell_volume, rank_cutoff=args.rank_cutoff)
        try:
            record = extract(req)
        except Exception as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        path = write_record(record, args.out)
        report = verify_schema(path)
        print(report)
        return 0 if report.passed else 1

    failures = 0
    for path in args.paths:
        report = verify_schema(path)
        print(report)
        failures += 0 if report.passed else 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
