"""``desargues config``: inspect and persist settings."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Annotated

import typer
from dotenv import set_key
from rich.table import Table

from desargues.arith.scalar import DEFAULT_TRIAL_BOUND
from desargues.butterfly.sampling import DEFAULT_SAMPLES
from desargues.logging import LEVELS

from . import console, settings
from .utils import FALSE_SET, TRUE_SET, get_logging_options

logger = logging.getLogger(__name__)

DEFAULTS: dict[str, str | None] = {
    "DESARGUES_SAMPLES": str(DEFAULT_SAMPLES),
    "DESARGUES_SEED": None,
    "DESARGUES_FORMAT": "json",
    "DESARGUES_TRIAL_BOUND": str(DEFAULT_TRIAL_BOUND),
    "DESARGUES_SCENE": None,
    "LOG_LEVEL": "WARNING",
    "LOG_FILE": None,
    "VERBOSE": "false",
}
KNOWN_KEYS = set(DEFAULTS)
INTEGER_MINIMUMS: dict[str, int | None] = {
    "DESARGUES_SAMPLES": 1,
    "DESARGUES_TRIAL_BOUND": 2,
    "DESARGUES_SEED": None,
}

app = typer.Typer(help="Show or update runtime configuration.")


def _validate(key: str, value: str) -> str:
    """Return the normalized value or raise ``typer.BadParameter``."""
    if key not in KNOWN_KEYS:
        raise typer.BadParameter(f"Unknown config key '{key}'")
    if key in INTEGER_MINIMUMS:
        try:
            number = int(value)
        except ValueError as exc:
            raise typer.BadParameter(f"{key} must be an integer; got {value!r}") from exc
        minimum = INTEGER_MINIMUMS[key]
        if minimum is not None and number < minimum:
            raise typer.BadParameter(f"{key} must be at least {minimum}; got {number}")
        return str(number)
    if key == "DESARGUES_FORMAT" and value not in {"json", "pretty"}:
        raise typer.BadParameter(f"DESARGUES_FORMAT must be json or pretty; got {value!r}")
    if key == "LOG_LEVEL":
        if value.upper() not in LEVELS:
            raise typer.BadParameter(
                f"Invalid log level '{value}'. Allowed levels: {', '.join(LEVELS)}"
            )
        return value.upper()
    if key == "VERBOSE":
        low = value.lower()
        if low not in TRUE_SET | FALSE_SET:
            raise typer.BadParameter(f"VERBOSE must be true or false; got {value!r}")
        return "true" if low in TRUE_SET else "false"
    return value


def _parse_pairs(pairs: list[str]) -> dict[str, str]:
    parsed: dict[str, str] = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep:
            raise typer.BadParameter(f"{item!r} is not VAR=VALUE")
        key = key.strip().upper()
        parsed[key] = _validate(key, value.strip())
    return parsed


def _write_env_file(values: dict[str, str]) -> Path:
    env_path = Path(settings.ENV_FILE)
    env_path.touch(exist_ok=True)
    env_path.chmod(0o600)
    for key, value in values.items():
        set_key(str(env_path), key, value, quote_mode="never")
    return env_path


@app.command()
def show(ctx: typer.Context) -> None:
    """Display current settings and where each comes from."""
    verbose, level, log_file = get_logging_options(ctx)
    logger.info("verbose=%s log_level=%s log_file=%s", verbose, level, log_file)
    layers = settings.read_layers()
    table = Table("Variable", "Effective", ".env", "Global", "Default", "Source")
    for var in sorted(KNOWN_KEYS):
        source = layers.source_of(var)
        effective = layers.merged.get(var) if source else DEFAULTS[var]
        table.add_row(
            var,
            effective or "-",
            layers.env_file.get(var) or "-",
            layers.global_config.get(var) or "-",
            DEFAULTS[var] or "-",
            source or "default",
        )
    console.print(table)


@app.command("set")
def set_value(
    ctx: typer.Context,
    pairs: Annotated[list[str], typer.Argument(metavar="VAR=VALUE")],
    local: Annotated[
        bool, typer.Option("--local", help="Write the project .env instead of the global config")
    ] = False,
) -> None:
    """Validate and persist configuration values."""
    values = _parse_pairs(pairs)
    if local:
        target = _write_env_file(values)
    else:
        settings.save_global_config({**settings.load_global_config(), **values})
        target = settings.GLOBAL_CONFIG_PATH
    for key, value in values.items():
        logger.info("Set %s=%s in %s", key, value, target)
    layers = settings.read_layers()
    ctx.ensure_object(dict).update({"layers": layers, "config": layers.merged})
