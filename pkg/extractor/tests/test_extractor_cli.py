"""Extractor command-line interface and shipped-fixture schema gate."""
from pathlib import Path

import pytest

from molparams import cli, verify_schema

SHIPPED = (Path(__file__).resolve().parents[2]
           / "src" / "qpecost" / "fixtures")


def test_extract_command_round_trip(tmp_path, capsys):
    rc = cli.main(["extract", "h2", "--basis", "6-31G",
                   "--out", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS")
    assert (tmp_path / "h2_6-31g.json").exists()


def test_extract_unknown_molecule_exit_code(tmp_path, capsys):
    rc = cli.main(["extract", "vibranium", "--out", str(tmp_path)])
    assert rc == 1
    assert "error" in capsys.readouterr().err


def test_verify_command(tmp_path, capsys):
    good = tmp_path / "x_t.json"
    good.write_text('{"name": "x", "basis": "t", "N": 4, "eta": 2, '
                    '"lambda_value": 1.0, "Lambda_max": 0.5, "Gamma": 2}')
    assert cli.main(["verify", str(good)]) == 0
    bad = tmp_path / "y_t.json"
    bad.write_text('{"name": "y"}')
    assert cli.main(["verify", str(bad)]) == 1


@pytest.mark.skipif(not SHIPPED.exists(), reason="engine fixtures not present")
def test_every_shipped_fixture_passes_schema():
    paths = sorted(SHIPPED.glob("*.json"))
    assert paths, "no shipped fixtures found"
    for path in paths:
        report = verify_schema(path)
        assert report.passed, str(report)
