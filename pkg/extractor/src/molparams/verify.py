"""Schema verification for emitted parameter files.

Mirrors the consuming engine's documented file contract: exact field names,
required keys, and the cross-field invariants. Failures are report entries,
not exceptions.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

REQUIRED = ("name", "basis", "N", "eta", "lambda_value", "Lambda_max", "Gamma")
OPTIONAL = ("J", "charges", "Omega", "x_max", "phi_max", "phi_prime_max",
            "alpha_ci", "gamma1_ci", "gamma2_ci", "L_rank", "norm_T",
            "norm_U", "norm_V", "H_norm_bound", "basis_contraction_d",
            "metadata")


@dataclass
class VerificationReport:
    path: str
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.path}"]
        lines += [f"  - {v}" for v in self.violations]
        return "\n".join(lines)


def verify_schema(path: str | Path) -> VerificationReport:
    path = Path(path)
    report = VerificationReport(path=str(path))
    if not path.exists():
        report.violations.append("file does not exist")
        return report
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        report.violations.append(f"not valid JSON: {exc}")
        return report
    if not isinstance(raw, dict):
        report.violations.append("top level must be a JSON object")
        return report

    for key in REQUIRED:
        if key not in raw:
            report.violations.append(f"missing required field {key}")
    unknown = set(raw) - set(REQUIRED) - set(OPTIONAL)
    for key in sorted(unknown):
        report.violations.append(f"unknown field {key}")
    if report.violations:
        return report

    n, eta = raw["N"], raw["eta"]
    if eta < 1:
        report.violations.append("eta >= 1 violated")
    if n < eta:
        report.violations.append(f"N >= eta violated (N={n}, eta={eta})")
    if raw["Lambda_max"] <= 0:
        report.violations.append("Lambda_max > 0 violated")
    if raw["lambda_value"] < raw["Lambda_max"]:
        report.violations.append("lambda_value >= Lambda_max violated")
    if raw["Gamma"] < 1:
        report.violations.append("Gamma >= 1 violated")
    if "Omega" in raw and raw["Omega"] <= 0:
        report.violations.append("Omega > 0 violated")
    if "L_rank" in raw and raw["L_rank"] > n * n / 4:
        report.violations.append(
            f"L_rank <= N^2/4 violated (L_rank={raw['L_rank']}, N={n})")
    if "charges" in raw and "J" in raw and len(raw["charges"]) != raw["J"]:
        report.violations.append("charges length differs from J")
    expected_name = f"{raw['name']}_{raw['basis']}.json"
    if path.name != expected_name:
        report.violations.append(
            f"file name {path.name} != canonical {expected_name}")
    return report
