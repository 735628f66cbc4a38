import json
import sys

import pytest
from typer.testing import CliRunner

import desargues.cli as cli_module
from desargues.butterfly.sweep import SweepResult
from desargues.cli import app, sweep_cmd
from desargues.errors import DegenerateLocus

runner = CliRunner()


def _error(result) -> dict:
    return json.loads(result.stdout)["error"]


def test_unknown_pencil_exits_one(square_scene):
    result = runner.invoke(app, ["involution", "--scene", str(square_scene), "--pencil", "Q", "--line", "L"])
    assert result.exit_code == 1
    error = _error(result)
    assert error["code"] == "unknown_reference"
    assert error["type"] == "UnknownReference"


def test_missing_scene_is_reported():
    result = runner.invoke(app, ["involution", "--pencil", "P", "--line", "L"])
    assert result.exit_code == 1
    assert _error(result)["code"] == "parse_error"


def test_failed_scenario_reports_its_code(square_scene):
    result = runner.invoke(
        app, ["verify", "klamkin", "--scene", str(square_scene), "--pencil", "P", "--direction", "1", "1"]
    )
    assert result.exit_code == 1
    assert _error(result)["code"] == "no_such_configuration"


def test_line_and_direction_are_exclusive(square_scene):
    result = runner.invoke(
        app,
        ["verify", "klamkin", "--scene", str(square_scene), "--pencil", "P", "--line", "L", "--direction", "0", "1"],
    )
    assert result.exit_code == 1
    assert _error(result)["code"] == "parse_error"


def test_degenerate_locus(square_scene):
    result = runner.invoke(app, ["eleven-point", "--scene", str(square_scene), "--pencil", "P"])
    assert result.exit_code == DegenerateLocus.exit_code
    assert _error(result)["code"] == "degenerate_locus"


def test_empty_viewport(square_scene, tmp_path):
    out = tmp_path / "x.svg"
    result = runner.invoke(
        app, ["render", "--scene", str(square_scene), "--out", str(out), "--viewport", "1,0,0,1"]
    )
    assert result.exit_code == 1
    assert _error(result)["code"] == "empty_viewport"
    assert not out.exists()


def test_failed_verdict_exits_two(monkeypatch):
    failing = SweepResult(seed=0, configurations=1, failures=["member (1:1) is not conjugate"])
    monkeypatch.setattr(sweep_cmd, "run_sweep", lambda samples, seed: failing)
    result = runner.invoke(app, ["sweep", "--samples", "1"])
    assert result.exit_code == 2
    data = json.loads(result.stdout)
    assert data["verdict"] == "fail"
    assert data["result"]["failures"] == ["member (1:1) is not conjugate"]


def test_invalid_log_level():
    result = runner.invoke(app, ["--log-level", "LOUD", "version"])
    assert result.exit_code != 0


def test_main_maps_library_errors_to_exit_code(monkeypatch):
    monkeypatch.setattr(sys, "argv", ["desargues", "version"])

    def failing_app(*_args, **_kwargs):
        raise DegenerateLocus("boom")

    monkeypatch.setattr(cli_module, "app", failing_app)
    with pytest.raises(SystemExit) as excinfo:
        cli_module.main()
    assert excinfo.value.code == 1
