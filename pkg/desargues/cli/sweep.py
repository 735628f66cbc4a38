from __future__ import annotations

from typing import Annotated

import typer

from desargues.butterfly.sweep import run_sweep

from .utils import (
    FormatOption,
    OutOption,
    OutputFormat,
    Report,
    emit,
    get_config,
    reporting_errors,
    resolve_optional_int,
)

DEFAULT_CONFIGURATIONS = 25
DEFAULT_SEED = 0


def sweep(
    ctx: typer.Context,
    samples: Annotated[
        int, typer.Option("--samples", min=1, help="Number of random pencils to check")
    ] = DEFAULT_CONFIGURATIONS,
    seed: Annotated[
        int | None, typer.Option("--seed", help="Seed; defaults to DESARGUES_SEED or 0")
    ] = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """Check Desargues consistency and order two on random pencils and lines.

    Examples:
        desargues sweep --samples 50 --seed 7
    """
    command = ["sweep"]
    with reporting_errors(command):
        resolved = resolve_optional_int(ctx, "seed", seed, get_config(ctx), "DESARGUES_SEED")
        result = run_sweep(samples, DEFAULT_SEED if resolved is None else resolved)
        verdict = "pass" if result.ok else "fail"
        emit(ctx, Report(command, {"samples": samples}, result.to_dict(), verdict), fmt, out)
