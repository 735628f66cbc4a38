"""Shared options, config resolution and report output for the commands."""

from __future__ import annotations

import json
import logging
from collections.abc import Iterator, Mapping, Sequence
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Annotated, Any

import typer
from click.core import ParameterSource
from rich.table import Table

from desargues.butterfly.sampling import DEFAULT_SAMPLES, sample_params
from desargues.errors import DesarguesError, ParseError
from desargues.pencil.pencil import PencilParam
from desargues.scene.codec import decode_pencil_param, decode_scalar, to_jsonable
from desargues.scene.model import Scene, load_scene

from . import console

logger = logging.getLogger(__name__)

TRUE_SET = {"1", "true", "yes"}
FALSE_SET = {"0", "false", "no"}


class OutputFormat(str, Enum):
    JSON = "json"
    PRETTY = "pretty"


SceneOption = Annotated[
    Path | None,
    typer.Option("--scene", help="Scene file (JSON or YAML); defaults to DESARGUES_SCENE"),
]
PencilOption = Annotated[str, typer.Option("--pencil", help="Pencil name in the scene")]
LineOption = Annotated[str, typer.Option("--line", help="Line name in the scene")]
FormatOption = Annotated[
    OutputFormat,
    typer.Option("--format", "-f", help="Report format; defaults to DESARGUES_FORMAT or json"),
]
SamplesOption = Annotated[
    int,
    typer.Option("--samples", min=1, help="Members to check; defaults to DESARGUES_SAMPLES"),
]
SeedOption = Annotated[
    int | None,
    typer.Option("--seed", help="Draw random members with this seed instead of the Farey sweep"),
]
OutOption = Annotated[
    Path | None, typer.Option("--out", "-o", help="Write the report to this file")
]


def get_logging_options(ctx: typer.Context) -> tuple[bool, str | None, Path | None]:
    """Return the logging options recorded by the root callback."""
    obj = ctx.ensure_object(dict)
    verbose = bool(obj.get("verbose", False))
    level = obj.get("log_level")
    log_file = obj.get("log_file")
    return verbose, level, log_file


def get_config(ctx: typer.Context) -> Mapping[str, str]:
    obj = ctx.ensure_object(dict)
    cfg = obj.get("config", {})
    return cfg if isinstance(cfg, Mapping) else {}


def _from_default(ctx: typer.Context, name: str) -> bool:
    return ctx.get_parameter_source(name) in (ParameterSource.DEFAULT, None)


def resolve_int(
    ctx: typer.Context,
    name: str,
    value: int,
    cfg: Mapping[str, str],
    key: str,
) -> int:
    """Return integer from config if option not explicitly provided."""
    if _from_default(ctx, name):
        val = cfg.get(key)
        if val is not None:
            try:
                return int(val)
            except ValueError:
                logger.warning("%s=%r is not an integer; using %s", key, val, value)
    return value


def resolve_optional_int(
    ctx: typer.Context,
    name: str,
    value: int | None,
    cfg: Mapping[str, str],
    key: str,
) -> int | None:
    if _from_default(ctx, name):
        val = cfg.get(key)
        if val:
            try:
                return int(val)
            except ValueError:
                logger.warning("%s=%r is not an integer; ignoring it", key, val)
    return value


def resolve_str(
    ctx: typer.Context,
    name: str,
    value: str | None,
    cfg: Mapping[str, str],
    key: str,
) -> str | None:
    """Return string from config if option not explicitly provided."""
    if _from_default(ctx, name):
        return cfg.get(key, value)
    return value


def resolve_format(ctx: typer.Context, value: OutputFormat) -> OutputFormat:
    raw = resolve_str(ctx, "fmt", value.value, get_config(ctx), "DESARGUES_FORMAT")
    try:
        return OutputFormat(raw)
    except ValueError as exc:
        raise typer.BadParameter(
            f"DESARGUES_FORMAT must be one of json, pretty; got {raw!r}"
        ) from exc


def resolve_samples(
    ctx: typer.Context, samples: int, seed: int | None
) -> list[PencilParam] | None:
    """Return the member parameters to check, or ``None`` for each verifier's own default.

    An explicit ``--samples`` or ``--seed`` (or their config keys) always wins.
    """
    cfg = get_config(ctx)
    count = resolve_int(ctx, "samples", samples, cfg, "DESARGUES_SAMPLES")
    seed = resolve_optional_int(ctx, "seed", seed, cfg, "DESARGUES_SEED")
    explicit = not _from_default(ctx, "samples") or "DESARGUES_SAMPLES" in cfg
    if seed is None and not explicit:
        return None
    if count < 1:
        raise ParseError(f"the sample count must be positive; got {count}")
    return sample_params(count, seed)


def load_scene_option(ctx: typer.Context, scene: Path | None) -> Scene:
    raw = resolve_str(ctx, "scene", str(scene) if scene else None, get_config(ctx), "DESARGUES_SCENE")
    if not raw:
        raise ParseError("no scene given; pass --scene or set DESARGUES_SCENE")
    return load_scene(Path(raw))


def parse_member(text: str) -> PencilParam:
    """Read a member parameter written ``λ:μ``, as a single value, or ``inf``."""
    return decode_pencil_param(text)


def parse_direction(values: Sequence[str]) -> tuple[Any, Any]:
    dx, dy = (decode_scalar(v) for v in values)
    if dx == 0 and dy == 0:
        raise ParseError("a direction needs a nonzero component")
    return dx, dy


def _radicands(data: Any) -> set[int]:
    found: set[int] = set()
    if isinstance(data, dict):
        if set(data) == {"a", "b", "d"} and isinstance(data["d"], int):
            found.add(data["d"])
        for value in data.values():
            found |= _radicands(value)
    elif isinstance(data, list):
        for value in data:
            found |= _radicands(value)
    return found


@dataclass
class Report:
    """The document printed by every command."""

    command: list[str]
    args: dict[str, Any]
    result: Any
    verdict: str | None = None
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        result = to_jsonable(self.result)
        data: dict[str, Any] = {
            "command": self.command,
            "args": to_jsonable(self.args),
            "result": result,
        }
        if self.verdict is not None:
            data["verdict"] = self.verdict
        data["diagnostics"] = {
            "radicands": sorted(_radicands(result)),
            **to_jsonable(self.diagnostics),
        }
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


def _print_pretty(data: dict[str, Any]) -> None:
    console.rule(" ".join(data["command"]))
    verdict = data.get("verdict")
    result = data["result"]
    checks = result.get("checks") if isinstance(result, dict) else None
    if checks:
        table = Table("Check", "Result")
        for name, ok in checks.items():
            table.add_row(name, "[green]pass[/green]" if ok else "[red]fail[/red]")
        console.print(table)
    console.print_json(data=result)
    if verdict is not None:
        color = "green" if verdict == "pass" else "red"
        console.print(f"[bold {color}]verdict: {verdict}[/bold {color}]")


def emit(
    ctx: typer.Context,
    report: Report,
    fmt: OutputFormat = OutputFormat.JSON,
    out: Path | None = None,
) -> None:
    """Write ``report`` and exit with status 2 on a failed verdict."""
    if out is not None:
        out.write_text(report.to_json() + "\n", encoding="utf-8")
        logger.info("Wrote report to %s", out)
    elif resolve_format(ctx, fmt) is OutputFormat.PRETTY:
        _print_pretty(report.to_dict())
    else:
        typer.echo(report.to_json())
    if report.verdict == "fail":
        raise typer.Exit(2)


@contextmanager
def reporting_errors(command: list[str]) -> Iterator[None]:
    """Turn library errors into a JSON error document and their exit code."""
    try:
        yield
    except DesarguesError as exc:
        logger.debug("%s failed", " ".join(command), exc_info=exc)
        payload = {
            "command": command,
            "error": {"code": exc.code, "type": type(exc).__name__, "message": str(exc)},
        }
        typer.echo(json.dumps(payload, indent=2, ensure_ascii=False))
        raise typer.Exit(exc.exit_code) from exc


__all__ = [
    "DEFAULT_SAMPLES",
    "FALSE_SET",
    "TRUE_SET",
    "OutputFormat",
    "Report",
    "emit",
    "get_config",
    "get_logging_options",
    "load_scene_option",
    "parse_direction",
    "parse_member",
    "reporting_errors",
    "resolve_format",
    "resolve_int",
    "resolve_optional_int",
    "resolve_samples",
    "resolve_str",
]
