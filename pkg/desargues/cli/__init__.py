"""Command-line interface for exact pencil and butterfly computations."""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Annotated

import typer
from dotenv import load_dotenv
from rich.console import Console

from desargues import __version__
from desargues.errors import DesarguesError
from desargues.logging import LEVELS, configure_logging, parse_level

from . import settings

# Keys the library reads from the process environment directly.
PASSTHROUGH_KEYS = ("DESARGUES_TRIAL_BOUND",)
TRUTHY = {"1", "true", "yes"}
DEFAULT_LOG_LEVEL = "WARNING"

logger = logging.getLogger(__name__)

console = Console()
app = typer.Typer(
    help="Desargues involutions, butterfly theorems and the eleven-point conic in exact arithmetic.",
    add_completion=False,
)


def resolve_log_level(verbose: bool | None, log_level: str | None, cfg: dict[str, str]) -> str:
    """Pick the effective level: ``--verbose`` beats ``--log-level`` beats ``VERBOSE``/``LOG_LEVEL``."""
    if verbose is None:
        verbose = cfg.get("VERBOSE", "").lower() in TRUTHY
    if verbose:
        return "DEBUG"
    level = log_level or cfg.get("LOG_LEVEL") or DEFAULT_LOG_LEVEL
    try:
        parse_level(level)
    except ValueError as exc:
        raise typer.BadParameter(
            f"{level!r} is not one of {', '.join(LEVELS)}", param_hint="--log-level"
        ) from exc
    return level.upper()


@app.callback(invoke_without_command=True)
def _main_callback(
    ctx: typer.Context,
    version: Annotated[bool, typer.Option("--version", "-V", help="Show version and exit")] = False,
    verbose: Annotated[
        bool | None, typer.Option("--verbose", "-v", help="Shortcut for --log-level DEBUG")
    ] = None,
    log_level: Annotated[
        str | None, typer.Option("--log-level", help="Logging level (e.g. INFO, DEBUG)")
    ] = None,
    log_file: Annotated[
        Path | None, typer.Option("--log-file", help="Also write logs to this file")
    ] = None,
    no_color: Annotated[bool, typer.Option("--no-color", help="Disable colorized output")] = False,
) -> None:
    """Global options."""
    if version:
        typer.echo(__version__)
        raise typer.Exit()

    layers = settings.read_layers()
    cfg = layers.merged
    for key in PASSTHROUGH_KEYS:
        if key in cfg:
            os.environ.setdefault(key, cfg[key])

    if no_color:
        console.no_color = True
    level = resolve_log_level(verbose, log_level, cfg)
    log_path = log_file or (Path(cfg["LOG_FILE"]) if cfg.get("LOG_FILE") else None)
    configure_logging(level, log_path, no_color=no_color)
    ctx.obj = {
        "layers": layers,
        "config": cfg,
        "log_level": level,
        "log_file": log_path,
        "verbose": level == "DEBUG",
        "no_color": no_color,
    }
    logger.debug(
        "Configuration sources: %s",
        {key: layers.source_of(key) for key in sorted(cfg) if key.startswith("DESARGUES_")},
    )

    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())
        raise typer.Exit()


@app.command("version")
def _version_command() -> None:
    """Show the installed ``desargues`` version."""
    typer.echo(__version__)


# Register subcommands implemented in dedicated modules.
from . import config as config_cmd  # noqa: E402
from . import geometry as geometry_cmd  # noqa: E402
from . import render as render_cmd  # noqa: E402
from . import sweep as sweep_cmd  # noqa: E402
from . import verify as verify_cmd  # noqa: E402

app.add_typer(config_cmd.app, name="config")
app.add_typer(verify_cmd.app, name="verify")
app.command("involution")(geometry_cmd.involution)
app.command("fixed-points")(geometry_cmd.fixed_points_command)
app.command("harmonic")(geometry_cmd.harmonic)
app.command("member")(geometry_cmd.member_command)
app.command("eleven-point")(geometry_cmd.eleven_point)
app.command("render")(render_cmd.render)
app.command("sweep")(sweep_cmd.sweep)


def main() -> None:
    """Entry point for the ``desargues`` console script."""
    load_dotenv(settings.ENV_FILE)
    try:
        app(prog_name="desargues")
    except DesarguesError as exc:  # pragma: no cover - commands report their own errors
        logger.error("[red]%s[/red]", exc)
        raise SystemExit(exc.exit_code) from exc


__all__ = ["app", "console", "main", "resolve_log_level"]
