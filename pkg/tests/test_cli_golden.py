"""Reports on the worked examples must match the committed documents byte for byte."""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from desargues.cli import app

runner = CliRunner()

GOLDEN = Path(__file__).parent / "golden"


def _golden(name: str) -> str:
    return (GOLDEN / name).read_text(encoding="utf-8")


@pytest.mark.parametrize(
    ("args", "name"),
    [
        (["verify", "prop1", "--pencil", "P", "--line", "L"], "square_prop1.json"),
        (["involution", "--pencil", "P", "--line", "L"], "square_involution.json"),
        (["fixed-points", "--pencil", "P", "--line", "L"], "square_fixed_points.json"),
    ],
)
def test_square_reports_match_golden(square_scene, args, name):
    result = runner.invoke(app, [*args, "--scene", str(square_scene)])
    assert result.exit_code == 0, result.stdout
    assert result.stdout == _golden(name)


def test_harmonic_matches_golden():
    result = runner.invoke(app, ["harmonic", "--params", "1", "0", "3"])
    assert result.exit_code == 0
    assert result.stdout == _golden("harmonic.json")


def test_square_eleven_point_error_matches_golden(square_scene):
    result = runner.invoke(app, ["eleven-point", "--scene", str(square_scene), "--pencil", "P"])
    assert result.exit_code == 1
    assert result.stdout == _golden("square_eleven_point.json")


def test_trapezoid_eleven_point_conic(trapezoid_scene):
    # four side midpoints lie on x = 1, so the conic is that line with the line through (0, 1), (2, 2)
    result = runner.invoke(app, ["eleven-point", "--scene", str(trapezoid_scene), "--pencil", "P"])
    assert result.exit_code == 0, result.stdout
    data = json.loads(result.stdout)
    assert data["result"]["conic"] == ["1", "-2", "0", "1", "2", "-2"]
    assert data["verdict"] == "pass"
    assert data["diagnostics"]["radicands"] == sorted(data["diagnostics"]["radicands"])


def test_golden_files_are_canonical_json():
    for path in sorted(GOLDEN.glob("*.json")):
        text = path.read_text(encoding="utf-8")
        assert text == json.dumps(json.loads(text), indent=2, ensure_ascii=False) + "\n", path.name
