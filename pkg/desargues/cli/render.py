from __future__ import annotations

import logging
from pathlib import Path
from typing import Annotated

import typer

from desargues.render.svg import DEFAULT_SIZE, RenderOptions, Viewport, render_scene

from .utils import (
    FormatOption,
    OutputFormat,
    Report,
    SceneOption,
    emit,
    load_scene_option,
    parse_member,
    reporting_errors,
)

logger = logging.getLogger(__name__)


def render(
    ctx: typer.Context,
    out: Annotated[Path, typer.Option("--out", "-o", help="SVG file to write")],
    scene: SceneOption = None,
    viewport: Annotated[
        str | None,
        typer.Option("--viewport", help="xmin,xmax,ymin,ymax; fitted to the points when omitted"),
    ] = None,
    width: Annotated[int, typer.Option("--width", help="Image width in pixels")] = DEFAULT_SIZE,
    height: Annotated[int, typer.Option("--height", help="Image height in pixels")] = DEFAULT_SIZE,
    members: Annotated[
        list[str] | None,
        typer.Option("--member", help="Pencil member λ:μ to draw (repeatable)"),
    ] = None,
    no_labels: Annotated[bool, typer.Option("--no-labels", help="Omit point labels")] = False,
    fmt: FormatOption = OutputFormat.JSON,
) -> None:
    """Draw a scene as an SVG figure and report what was drawn.

    Examples:
        desargues render --scene square.yaml --out square.svg
    """
    command = ["render"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        options = RenderOptions(width=width, height=height, labels=not no_labels)
        if viewport is not None:
            options.viewport = Viewport.parse(viewport, width, height)
        if members:
            options.members = [parse_member(m) for m in members]
        result = render_scene(s, options)
        out.write_text(result.svg, encoding="utf-8")
        logger.info("Wrote %s", out)
        payload = {"out": str(out), "curves": result.curves, "notes": result.notes}
        emit(ctx, Report(command, {"out": str(out)}, payload), fmt)
