"""Commands exposing the involution, pencil and eleven-point operations directly."""

from __future__ import annotations

from typing import Annotated, Any

import typer

from desargues.butterfly.centers import eleven_point_conic
from desargues.conics.conic import center, classify_affine
from desargues.errors import NoUniquePole, ParseError
from desargues.involution.relation import fixed_points
from desargues.pencil.pencil import desargues_involution, member, member_through
from desargues.projective.chart import harmonic_conjugate
from desargues.scene.codec import decode_param

from .utils import (
    FormatOption,
    LineOption,
    OutOption,
    OutputFormat,
    PencilOption,
    Report,
    SceneOption,
    emit,
    load_scene_option,
    parse_member,
    reporting_errors,
)


def involution(
    ctx: typer.Context,
    pencil: PencilOption,
    line: LineOption,
    scene: SceneOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """Print the Desargues involution a pencil induces on a line.

    Examples:
        desargues involution --scene square.yaml --pencil P --line L
    """
    command = ["involution"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        inv, chart = desargues_involution(s.pencil(pencil), s.line(line))
        result = {"involution": inv, "fixed_form": inv.fixed_form, "chart": chart}
        emit(ctx, Report(command, {"pencil": pencil, "line": line}, result), fmt, out)


def fixed_points_command(
    ctx: typer.Context,
    pencil: PencilOption,
    line: LineOption,
    scene: SceneOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """Print the fixed points of the Desargues involution, exactly or in Q(√d)."""
    command = ["fixed-points"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        inv, chart = desargues_involution(s.pencil(pencil), s.line(line))
        roots = fixed_points(inv)
        result = {
            "involution": inv,
            "chart": chart,
            "fixed_points": roots,
            "points": [chart.point(r) for r in roots],
        }
        diagnostics = {"imaginary": roots.is_imaginary}
        emit(
            ctx,
            Report(command, {"pencil": pencil, "line": line}, result, diagnostics=diagnostics),
            fmt,
            out,
        )


def harmonic(
    ctx: typer.Context,
    params: Annotated[
        tuple[str, str, str],
        typer.Option("--params", help="M P Q: the point and the pair, as values, s:t or inf"),
    ],
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """Print the harmonic conjugate of M with respect to P and Q.

    Examples:
        desargues harmonic --params 1 0 3
    """
    command = ["harmonic"]
    with reporting_errors(command):
        m, p, q = (decode_param(v) for v in params)
        result = harmonic_conjugate(m, p, q)
        emit(ctx, Report(command, {"params": list(params)}, result), fmt, out)


def member_command(
    ctx: typer.Context,
    pencil: PencilOption,
    param: Annotated[
        str | None, typer.Option("--param", help="Member parameter λ:μ")
    ] = None,
    through: Annotated[
        str | None, typer.Option("--through", help="Name of a scene point the member passes through")
    ] = None,
    scene: SceneOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """Print one member of a pencil with its affine classification."""
    command = ["member"]
    with reporting_errors(command):
        if param is not None and through is not None:
            raise ParseError("give only one of --param and --through")
        s = load_scene_option(ctx, scene)
        p = s.pencil(pencil)
        if through is not None:
            t, conic = member_through(p, s.point(through))
        elif param is not None:
            t = parse_member(param)
            conic = member(p, t)
        else:
            raise ParseError("give one of --param and --through")
        result: dict[str, Any] = {
            "param": t,
            "conic": conic,
            "rank": conic.rank,
            "classification": str(classify_affine(conic)),
        }
        try:
            c, proper = center(conic)
        except NoUniquePole:
            pass
        else:
            result["center"] = c
            result["proper_center"] = proper
        args = {"pencil": pencil, "param": param, "through": through}
        emit(ctx, Report(command, args, result), fmt, out)


def eleven_point(
    ctx: typer.Context,
    pencil: PencilOption,
    scene: SceneOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """Fit the conic of centers and evaluate it at the eleven classical points."""
    command = ["eleven-point"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        locus = eleven_point_conic(s.pencil(pencil))
        emit(
            ctx,
            Report(command, {"pencil": pencil}, locus.to_dict(), verdict=locus.verdict.value),
            fmt,
            out,
        )
