"""Named butterfly configurations.

Each scenario first checks its own hypothesis on the pencil and line,
raising when the configuration does not meet it, then runs the shared
member checks and adds the scenario's exact assertions to ``checks``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from desargues.arith.binary import HomParam, quad_roots
from desargues.arith.linalg import dot
from desargues.arith.quadext import Scalar
from desargues.arith.scalar import sign, simplify
from desargues.conics.conic import axes, center, polar
from desargues.conics.intersection import is_asymptote, restrict_to_line
from desargues.errors import (
    DesarguesError,
    EquidistanceFails,
    FixedPointMismatch,
    NoCenter,
    NoProperCenter,
    NoSuchConfiguration,
    NotPerpendicular,
    NotThroughDiagonalPoint,
)
from desargues.pencil.pencil import (
    Pencil,
    PencilParam,
    degenerate_members,
    desargues_involution,
    diagonal_points,
    member,
    member_restriction,
    member_through,
)
from desargues.projective.elements import Line, Point, meet, midpoint, perpendicular

from .constructions import circle_member
from .propositions import build_report
from .report import ButterflyReport
from .sampling import DEFAULT_SAMPLES, farey_params

logger = logging.getLogger(__name__)

SEARCH_SAMPLES = 4 * DEFAULT_SAMPLES


def _params(samples: Sequence[PencilParam] | None, count: int) -> list[PencilParam]:
    return list(samples) if samples is not None else farey_params(count)


def _squared_distance(u: Point, v: Point) -> Scalar:
    (ux, uy), (vx, vy) = u.affine(), v.affine()
    return simplify((ux - vx) ** 2 + (uy - vy) ** 2)


def scenario_klamkin(
    p: Pencil, line: Line, samples: Sequence[PencilParam] | None = None
) -> ButterflyReport:
    """Two members whose chords on ``line`` share a midpoint ``M``.

    Then ``M`` and the infinite point of ``line`` are the fixed points and
    every other chord is bisected by ``M`` too.
    """
    if line.is_at_infinity:
        raise NoSuchConfiguration("the line at infinity has no midpoints")
    params = _params(samples, SEARCH_SAMPLES)
    _, chart = desargues_involution(p, line)
    seen: dict[Scalar, PencilParam] = {}
    witness: tuple[PencilParam, PencilParam, Scalar] | None = None
    for param in params:
        q = member_restriction(p, chart, param)
        mid = q.midpoint()
        if mid is None or q.discriminant == 0:
            continue
        if mid in seen:
            witness = (seen[mid], param, mid)
            break
        seen[mid] = param
    if witness is None:
        raise NoSuchConfiguration(
            f"no two of {len(params)} sampled members cut {line} in chords with a common midpoint"
        )
    first, second, mid = witness

    report = build_report("klamkin", p, line, params)
    fixed_form = report.involution.fixed_form
    m = HomParam(mid)
    report.checks["fixed_points_are_midpoint_and_infinity"] = (
        fixed_form.evaluate(m) == 0 and fixed_form.evaluate(HomParam.infinity()) == 0
    )
    report.checks["chords_share_midpoint"] = all(
        c.restriction.midpoint() == mid
        for c in report.members
        if c.restriction.a != 0
    )
    report.details.update(
        midpoint=chart.point(m),
        witness_members=[first, second],
    )
    return report


def scenario_circle(
    p: Pencil, line: Line, samples: Sequence[PencilParam] | None = None
) -> ButterflyReport:
    """A member meets ``line`` in ``P, Q`` equidistant from the circle's center ``O``.

    The foot ``M`` of the perpendicular from ``O`` and the infinite point of
    ``line`` are then the fixed points; the member through the infinite point
    has ``line`` as an asymptote.
    """
    if line.is_at_infinity:
        raise NoSuchConfiguration("the line at infinity has no perpendicular foot")
    circle_param, circle = circle_member(p)
    o, _ = center(circle)
    params = _params(samples, SEARCH_SAMPLES)
    _, chart = desargues_involution(p, line)

    found: tuple[PencilParam, Point, Point] | None = None
    for param in params:
        if param == circle_param:
            continue
        q = member_restriction(p, chart, param)
        if q.is_zero or q.a == 0 or sign(q.discriminant) <= 0:
            continue
        try:
            roots = quad_roots(q)
        except DesarguesError as exc:
            logger.debug("Skipping member %s: %s", param, exc)
            continue
        first, second = (chart.point(r) for r in roots)
        if _squared_distance(o, first) == _squared_distance(o, second):
            found = (param, first, second)
            break
    if found is None:
        raise EquidistanceFails(
            f"no sampled member cuts {line} in points equidistant from the center {o}"
        )
    param, first, second = found
    foot = midpoint(first, second)

    report = build_report("circle", p, line, params)
    fixed_form = report.involution.fixed_form
    (ox, oy), (mx, my) = o.affine(), foot.affine()
    report.checks["perpendicular_foot"] = dot((ox - mx, oy - my), line.direction()) == 0
    report.checks["fixed_points_are_foot_and_infinity"] = (
        fixed_form.evaluate(chart.param(foot)) == 0
        and fixed_form.evaluate(HomParam.infinity()) == 0
    )
    report.checks["tangent_member_at_foot"] = any(
        t.point == foot and t.touches for t in report.tangent_members
    )

    infinite = line.infinite_point()
    asymptote_param, asymptote_member = member_through(p, infinite)
    if asymptote_member.is_degenerate:
        q = restrict_to_line(asymptote_member, chart)
        touches = not q.is_zero and q.discriminant == 0 and q.a == 0
        report.checks["asymptote_member"] = touches
        report.notes.append(
            f"member {asymptote_param} through {infinite} is the degenerate {asymptote_member}; "
            "it meets the line only at infinity"
        )
    else:
        report.checks["asymptote_member"] = is_asymptote(asymptote_member, line)
    report.details.update(
        circle=circle,
        center=o,
        foot=foot,
        equidistant_member=param,
        chord=[first, second],
        asymptote_member=asymptote_param,
    )
    return report


def scenario_diameter(
    p: Pencil,
    h_param: PencilParam,
    line: Line,
    samples: Sequence[PencilParam] | None = None,
) -> ButterflyReport:
    """``line`` is conjugate to the diameter ``k`` of the member ``H``.

    ``k`` is the polar of the infinite point ``N`` of ``line``; its meet ``M``
    with ``line`` and ``N`` must be the fixed points.
    """
    h = member(p, h_param)
    if h.is_degenerate:
        raise NoProperCenter(f"member {h_param} is the degenerate {h}")
    c, proper = center(h)
    if not proper:
        raise NoProperCenter(f"member {h_param} is a parabola; its center {c} is at infinity")
    if line.is_at_infinity:
        raise NoSuchConfiguration("the line at infinity has no direction")
    n = line.infinite_point()
    k = polar(h, n)
    if k == line:
        raise FixedPointMismatch(f"{line} is an asymptote of {h}; it has no conjugate diameter")
    m = meet(line, k)
    if m == n:
        raise FixedPointMismatch(f"{n} lies on {h}, so the diameter {k} is parallel to {line}")
    inv, chart = desargues_involution(p, line)
    fixed_form = inv.fixed_form
    if fixed_form.evaluate(chart.param(m)) != 0 or fixed_form.evaluate(chart.param(n)) != 0:
        raise FixedPointMismatch(
            f"{m} and {n} are not the fixed points of the involution {inv} on {line}"
        )

    report = build_report("diameter", p, line, samples)
    report.checks["diameter_through_center"] = c.lies_on(k)
    report.checks["fixed_points_match"] = True
    report.details.update(member=h_param, conic=h, center=c, diameter=k, m=m, n=n)
    return report


def scenario_axis(
    p: Pencil,
    h_param: PencilParam,
    line: Line,
    samples: Sequence[PencilParam] | None = None,
) -> ButterflyReport:
    """``line`` is perpendicular to an axis of the member ``H``."""
    h = member(p, h_param)
    if h.is_degenerate:
        raise NoProperCenter(f"member {h_param} is the degenerate {h}")
    try:
        pair = axes(h)
    except NoCenter as exc:
        raise NoProperCenter(str(exc)) from exc
    if line.is_at_infinity:
        raise NoSuchConfiguration("the line at infinity has no direction")
    direction = line.direction()
    axis = next((a for a in pair if perpendicular(direction, a.direction())), None)
    if axis is None:
        raise NotPerpendicular(f"{line} is perpendicular to neither axis {pair[0]}, {pair[1]}")

    report = scenario_diameter(p, h_param, line, samples)
    report.scenario = "axis"
    report.checks["perpendicular_to_axis"] = True
    report.checks["diameter_is_axis"] = report.details["diameter"] == axis
    report.details["axis"] = axis
    return report


def scenario_diagonal(
    p: Pencil, line: Line, samples: Sequence[PencilParam] | None = None
) -> ButterflyReport:
    """``line`` passes through a diagonal point ``X`` of the quadrangle.

    The line pair with vertex ``X`` cuts ``line`` twice at ``X``, so ``X`` is
    a fixed point.
    """
    pairs = list(zip(degenerate_members(p), diagonal_points(p)))
    hit = next(((pm, x) for pm, x in pairs if x.lies_on(line)), None)
    if hit is None:
        raise NotThroughDiagonalPoint(f"{line} misses the diagonal points")
    (vertex_param, _), x = hit

    report = build_report("diagonal", p, line, samples)
    chart = report.chart
    fixed_form = report.involution.fixed_form
    x_param = chart.param(x)
    report.checks["diagonal_point_fixed"] = fixed_form.evaluate(x_param) == 0
    if report.fixed_points is not None:
        other = next((r for r in report.fixed_points if r != x_param), x_param)
        report.details["other_fixed_point"] = chart.point(other)
    report.flags["symmetric"] = report.flags["midpoint_interpretation"]
    report.details.update(
        diagonal_point=x,
        vertex_member=vertex_param,
        opposite_side_pairs=[
            restrict_to_line(g, chart) for pm, g in degenerate_members(p) if pm != vertex_param
        ],
    )
    return report


__all__ = [
    "scenario_axis",
    "scenario_circle",
    "scenario_diagonal",
    "scenario_diameter",
    "scenario_klamkin",
]
