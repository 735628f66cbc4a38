"""``desargues verify``: run one butterfly verifier on a scene."""

from __future__ import annotations

from typing import Annotated, Any

import typer

from desargues.butterfly.centers import butterfly_point
from desargues.butterfly.constructions import axis_aligned_member, line_with_infinite_fixed_point
from desargues.butterfly.propositions import verify_prop1, verify_prop2
from desargues.butterfly.report import ButterflyReport
from desargues.butterfly.scenarios import (
    scenario_axis,
    scenario_circle,
    scenario_diagonal,
    scenario_diameter,
    scenario_klamkin,
)
from desargues.errors import ParseError
from desargues.pencil.pencil import Pencil, member_restriction
from desargues.projective.chart import default_chart
from desargues.projective.elements import Line
from desargues.scene.model import Scene

from .utils import (
    DEFAULT_SAMPLES,
    FormatOption,
    OutOption,
    OutputFormat,
    PencilOption,
    Report,
    SamplesOption,
    SceneOption,
    SeedOption,
    emit,
    load_scene_option,
    parse_direction,
    parse_member,
    reporting_errors,
    resolve_samples,
)

app = typer.Typer(help="Check the butterfly theorems exactly on a scene.")

LineName = Annotated[str, typer.Option("--line", help="Line name in the scene")]
OptionalLine = Annotated[str | None, typer.Option("--line", help="Line name in the scene")]
DirectionOption = Annotated[
    tuple[str, str] | None,
    typer.Option(
        "--direction",
        help="DX DY: use the line of this direction whose infinite point is a fixed point",
    ),
]
MemberOption = Annotated[str | None, typer.Option("--member", help="Member parameter λ:μ")]


def _line(scene: Scene, p: Pencil, line: str | None, direction: tuple[str, str] | None) -> Line:
    if line is not None and direction is not None:
        raise ParseError("give only one of --line and --direction")
    if line is not None:
        return scene.line(line)
    if direction is not None:
        return line_with_infinite_fixed_point(p, parse_direction(direction))
    raise ParseError("give one of --line and --direction")


def _report(command: list[str], args: dict[str, Any], report: ButterflyReport) -> Report:
    return Report(
        command,
        args,
        report.to_dict(),
        verdict=report.verdict.value,
        diagnostics={"radicand": report.radicand},
    )


@app.command("prop1")
def prop1(
    ctx: typer.Context,
    pencil: PencilOption,
    line: LineName,
    scene: SceneOption = None,
    samples: SamplesOption = DEFAULT_SAMPLES,
    seed: SeedOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """Every member pair on the line is harmonic to the fixed points.

    Examples:
        desargues verify prop1 --scene square.yaml --pencil P --line L
    """
    command = ["verify", "prop1"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        report = verify_prop1(s.pencil(pencil), s.line(line), resolve_samples(ctx, samples, seed))
        emit(ctx, _report(command, {"pencil": pencil, "line": line}, report), fmt, out)


@app.command("prop2")
def prop2(
    ctx: typer.Context,
    pencil: PencilOption,
    line: LineName,
    qa: Annotated[str, typer.Option("--qa", help="First member λ:μ")],
    qb: Annotated[str, typer.Option("--qb", help="Second member λ:μ")],
    scene: SceneOption = None,
    samples: SamplesOption = DEFAULT_SAMPLES,
    seed: SeedOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """Recover the fixed points from two members' pairs and compare with the pencil."""
    command = ["verify", "prop2"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        p, l_ = s.pencil(pencil), s.line(line)
        chart = default_chart(l_)
        form_a = member_restriction(p, chart, parse_member(qa))
        form_b = member_restriction(p, chart, parse_member(qb))
        report = verify_prop2(p, l_, form_a, form_b, resolve_samples(ctx, samples, seed))
        args = {"pencil": pencil, "line": line, "qa": qa, "qb": qb}
        emit(ctx, _report(command, args, report), fmt, out)


@app.command("klamkin")
def klamkin(
    ctx: typer.Context,
    pencil: PencilOption,
    line: OptionalLine = None,
    direction: DirectionOption = None,
    scene: SceneOption = None,
    samples: SamplesOption = DEFAULT_SAMPLES,
    seed: SeedOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """Two chords sharing a midpoint force every chord to share it.

    Examples:
        desargues verify klamkin --scene square.yaml --pencil P --direction 1 1
    """
    command = ["verify", "klamkin"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        p = s.pencil(pencil)
        l_ = _line(s, p, line, direction)
        report = scenario_klamkin(p, l_, resolve_samples(ctx, samples, seed))
        args = {"pencil": pencil, "line": line, "direction": direction, "resolved_line": l_}
        emit(ctx, _report(command, args, report), fmt, out)


@app.command("circle")
def circle(
    ctx: typer.Context,
    pencil: PencilOption,
    line: LineName,
    scene: SceneOption = None,
    samples: SamplesOption = DEFAULT_SAMPLES,
    seed: SeedOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """Concyclic base points: the fixed points are the perpendicular foot and infinity."""
    command = ["verify", "circle"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        report = scenario_circle(s.pencil(pencil), s.line(line), resolve_samples(ctx, samples, seed))
        emit(ctx, _report(command, {"pencil": pencil, "line": line}, report), fmt, out)


@app.command("diameter")
def diameter(
    ctx: typer.Context,
    pencil: PencilOption,
    member: Annotated[str, typer.Option("--member", help="Member parameter λ:μ")],
    line: OptionalLine = None,
    direction: DirectionOption = None,
    scene: SceneOption = None,
    samples: SamplesOption = DEFAULT_SAMPLES,
    seed: SeedOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """The line is conjugate to a diameter of the chosen member."""
    command = ["verify", "diameter"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        p = s.pencil(pencil)
        l_ = _line(s, p, line, direction)
        report = scenario_diameter(
            p, parse_member(member), l_, resolve_samples(ctx, samples, seed)
        )
        args = {"pencil": pencil, "member": member, "line": line, "direction": direction}
        emit(ctx, _report(command, args, report), fmt, out)


@app.command("axis")
def axis(
    ctx: typer.Context,
    pencil: PencilOption,
    member: MemberOption = None,
    line: OptionalLine = None,
    direction: DirectionOption = None,
    scene: SceneOption = None,
    samples: SamplesOption = DEFAULT_SAMPLES,
    seed: SeedOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """The line is perpendicular to an axis of the chosen member.

    Without ``--member`` the member with no ``xy`` term is used.
    """
    command = ["verify", "axis"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        p = s.pencil(pencil)
        h = parse_member(member) if member is not None else axis_aligned_member(p)
        l_ = _line(s, p, line, direction)
        report = scenario_axis(p, h, l_, resolve_samples(ctx, samples, seed))
        args = {"pencil": pencil, "member": h, "line": line, "direction": direction}
        emit(ctx, _report(command, args, report), fmt, out)


@app.command("diagonal")
def diagonal(
    ctx: typer.Context,
    pencil: PencilOption,
    line: LineName,
    scene: SceneOption = None,
    samples: SamplesOption = DEFAULT_SAMPLES,
    seed: SeedOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """A line through a diagonal point has that point as a fixed point."""
    command = ["verify", "diagonal"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        report = scenario_diagonal(
            s.pencil(pencil), s.line(line), resolve_samples(ctx, samples, seed)
        )
        emit(ctx, _report(command, {"pencil": pencil, "line": line}, report), fmt, out)


@app.command("butterfly-point")
def butterfly_point_command(
    ctx: typer.Context,
    pencil: PencilOption,
    point: Annotated[str, typer.Option("--point", help="Point name in the scene")],
    require_axis: Annotated[
        bool, typer.Option("--require-axis", help="Fail when the axis is undefined")
    ] = False,
    scene: SceneOption = None,
    fmt: FormatOption = OutputFormat.JSON,
    out: OutOption = None,
) -> None:
    """Decide whether a point is the center of some member and give its axis."""
    command = ["verify", "butterfly-point"]
    with reporting_errors(command):
        s = load_scene_option(ctx, scene)
        result = butterfly_point(s.pencil(pencil), s.point(point), require_axis=require_axis)
        args = {"pencil": pencil, "point": point, "require_axis": require_axis}
        emit(ctx, Report(command, args, result.to_dict()), fmt, out)
