"""Scene files: named points, lines, pencils and conics.

A scene is JSON or YAML::

    {
      "points": {"A": {"x": "1", "y": "1"}, "B": ["-1", "1", "1"], ...},
      "lines": {"L": {"coefficients": ["0", "1", "0"]}, "AB": {"through": ["A", "B"]}},
      "pencils": {"P": ["A", "B", "C", "D"]},
      "conics": {"K": {"circle_through": ["A", "B", "C"]}}
    }

Every coordinate is an exact string or integer; floats are rejected.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, TypeVar

import yaml
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from desargues.conics.conic import Conic
from desargues.conics.fitting import circle_through
from desargues.errors import ParseError, UnknownReference
from desargues.pencil.pencil import Pencil, pencil_new
from desargues.projective.elements import Line, Point, join

from .codec import decode_conic, decode_line, decode_point, to_jsonable

logger = logging.getLogger(__name__)

YAML_SUFFIXES = {".yaml", ".yml"}

T = TypeVar("T")


class LineSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    coefficients: list[Any] | None = None
    through: tuple[str, str] | None = None

    @model_validator(mode="after")
    def _one_form(self) -> "LineSpec":
        if (self.coefficients is None) == (self.through is None):
            raise ValueError("give exactly one of 'coefficients' or 'through'")
        return self


class ConicSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    coefficients: list[Any] | None = None
    circle_through: tuple[str, str, str] | None = None

    @model_validator(mode="after")
    def _one_form(self) -> "ConicSpec":
        if (self.coefficients is None) == (self.circle_through is None):
            raise ValueError("give exactly one of 'coefficients' or 'circle_through'")
        return self


class SceneSpec(BaseModel):
    """The validated, still unresolved, shape of a scene file."""

    model_config = ConfigDict(extra="forbid")

    description: str | None = None
    points: dict[str, Any] = {}
    lines: dict[str, LineSpec] = {}
    pencils: dict[str, tuple[str, str, str, str]] = {}
    conics: dict[str, ConicSpec] = {}

    @model_validator(mode="after")
    def _unique_names(self) -> "SceneSpec":
        seen: dict[str, str] = {}
        for section in ("points", "lines", "pencils", "conics"):
            for name in getattr(self, section):
                if name in seen:
                    raise ValueError(f"name {name!r} is used in both {seen[name]} and {section}")
                seen[name] = section
        return self


@dataclass
class Scene:
    """A scene with every reference resolved to exact geometry."""

    points: dict[str, Point] = field(default_factory=dict)
    lines: dict[str, Line] = field(default_factory=dict)
    pencils: dict[str, Pencil] = field(default_factory=dict)
    conics: dict[str, Conic] = field(default_factory=dict)
    pencil_points: dict[str, tuple[str, ...]] = field(default_factory=dict)
    description: str | None = None

    def point(self, name: str) -> Point:
        return _lookup(self.points, name, "point")

    def line(self, name: str) -> Line:
        return _lookup(self.lines, name, "line")

    def pencil(self, name: str) -> Pencil:
        return _lookup(self.pencils, name, "pencil")

    def conic(self, name: str) -> Conic:
        return _lookup(self.conics, name, "conic")


def _lookup(table: dict[str, T], name: str, kind: str) -> T:
    try:
        return table[name]
    except KeyError:
        known = ", ".join(sorted(table)) or "none"
        raise UnknownReference(f"unknown {kind} {name!r} (known: {known})") from None


def _reject_duplicates(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    result: dict[str, Any] = {}
    for key, value in pairs:
        if key in result:
            raise ParseError(f"duplicate key {key!r}")
        result[key] = value
    return result


def parse_scene(data: object) -> Scene:
    """Validate raw scene data and resolve every name."""
    if not isinstance(data, dict):
        raise ParseError("a scene must be a mapping at the top level")
    try:
        parsed = SceneSpec.model_validate(data)
    except ValidationError as exc:
        raise ParseError(f"invalid scene: {exc}") from exc

    scene = Scene(description=parsed.description)
    for name, raw in parsed.points.items():
        scene.points[name] = decode_point(raw)
    for name, line_spec in parsed.lines.items():
        if line_spec.through is not None:
            p, q = (scene.point(n) for n in line_spec.through)
            scene.lines[name] = join(p, q)
        else:
            scene.lines[name] = decode_line(line_spec.coefficients)
    for name, names in parsed.pencils.items():
        scene.pencils[name] = pencil_new(*(scene.point(n) for n in names))
        scene.pencil_points[name] = names
    for name, conic_spec in parsed.conics.items():
        if conic_spec.circle_through is not None:
            p, q, r = (scene.point(n) for n in conic_spec.circle_through)
            scene.conics[name] = circle_through(p, q, r)
        else:
            scene.conics[name] = decode_conic(conic_spec.coefficients)
    logger.debug(
        "Scene resolved: %d points, %d lines, %d pencils, %d conics",
        len(scene.points),
        len(scene.lines),
        len(scene.pencils),
        len(scene.conics),
    )
    return scene


def load_scene(path: Path) -> Scene:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read scene {path}: {exc}") from exc
    try:
        if path.suffix.lower() in YAML_SUFFIXES:
            data = yaml.safe_load(text)
        else:
            data = json.loads(text, object_pairs_hook=_reject_duplicates)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise ParseError(f"cannot parse scene {path}: {exc}") from exc
    return parse_scene(data)


def dump_scene(scene: Scene) -> dict[str, Any]:
    """Serialize ``scene`` so that :func:`parse_scene` gives it back."""
    data: dict[str, Any] = {}
    if scene.description is not None:
        data["description"] = scene.description
    data["points"] = {name: to_jsonable(p) for name, p in scene.points.items()}
    data["lines"] = {name: {"coefficients": to_jsonable(line)} for name, line in scene.lines.items()}
    data["pencils"] = {name: list(names) for name, names in scene.pencil_points.items()}
    data["conics"] = {name: {"coefficients": to_jsonable(c)} for name, c in scene.conics.items()}
    return data


__all__ = [
    "ConicSpec",
    "LineSpec",
    "Scene",
    "SceneSpec",
    "dump_scene",
    "load_scene",
    "parse_scene",
]
