"""Shared fixtures: isolated configuration and a few worked pencils."""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any

import pytest

ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from desargues.pencil.pencil import Pencil, pencil_new  # noqa: E402
from desargues.projective.elements import Line, Point  # noqa: E402

CONFIG_KEYS = (
    "DESARGUES_SAMPLES",
    "DESARGUES_SEED",
    "DESARGUES_FORMAT",
    "DESARGUES_TRIAL_BOUND",
    "DESARGUES_SCENE",
    "LOG_LEVEL",
    "LOG_FILE",
    "VERBOSE",
)

SQUARE_SCENE: dict[str, Any] = {
    "description": "unit square",
    "points": {
        "A": [1, 1, 1],
        "B": [-1, 1, 1],
        "C": [-1, -1, 1],
        "D": [1, -1, 1],
        "O": {"x": 0, "y": 0},
        "H": {"x": 0, "y": "1/2"},
    },
    "lines": {
        "L": {"coefficients": [0, 1, 0]},
        "V": {"through": ["O", "H"]},
        "S": {"coefficients": [0, 1, -1]},
    },
    "pencils": {"P": ["A", "B", "C", "D"]},
}

TRAPEZOID_SCENE: dict[str, Any] = {
    "points": {
        "A": {"x": 0, "y": 0},
        "B": {"x": 2, "y": 0},
        "C": {"x": 0, "y": 2},
        "D": {"x": 2, "y": 4},
    },
    "lines": {"L": {"coefficients": [1, 1, -5]}},
    "pencils": {"P": ["A", "B", "C", "D"]},
}


@pytest.fixture(autouse=True)
def _isolated_config(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Keep user config, project ``.env`` and stray environment out of every test."""
    for key in CONFIG_KEYS:
        monkeypatch.delenv(key, raising=False)
    from desargues.cli import settings

    cfg_dir = tmp_path / "user-config"
    monkeypatch.setattr(settings, "GLOBAL_CONFIG_DIR", cfg_dir)
    monkeypatch.setattr(settings, "GLOBAL_CONFIG_PATH", cfg_dir / "config.json")
    monkeypatch.setattr(settings, "ENV_FILE", str(tmp_path / ".env"))


def _point(x: int, y: int) -> Point:
    return Point(x, y, 1)


@pytest.fixture
def square() -> Pencil:
    """Conics through (±1, ±1); G1 = y² − 1, G2 = x² − 1."""
    return pencil_new(_point(1, 1), _point(-1, 1), _point(-1, -1), _point(1, -1))


@pytest.fixture
def trapezoid() -> Pencil:
    """Conics through (0,0), (2,0), (0,2), (2,4); the sides AC and BD are parallel."""
    return pencil_new(_point(0, 0), _point(2, 0), _point(0, 2), _point(2, 4))


@pytest.fixture
def generic() -> Pencil:
    """Four points with no parallel sides and no circle through them."""
    return pencil_new(_point(0, 0), _point(3, 1), _point(1, 4), _point(-2, 2))


@pytest.fixture
def x_axis() -> Line:
    return Line(0, 1, 0)


def _write(path: Path, data: dict[str, Any]) -> Path:
    path.write_text(json.dumps(data, indent=2), encoding="utf-8")
    return path


@pytest.fixture
def square_scene(tmp_path: Path) -> Path:
    return _write(tmp_path / "square.json", SQUARE_SCENE)


@pytest.fixture
def trapezoid_scene(tmp_path: Path) -> Path:
    return _write(tmp_path / "trapezoid.json", TRAPEZOID_SCENE)
