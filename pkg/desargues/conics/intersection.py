"""Restriction of a conic to a line and the resulting intersection."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from desargues.arith.binary import BinaryQuadratic, quad_roots
from desargues.arith.linalg import bilinear
from desargues.errors import DegenerateConic
from desargues.projective.chart import LineChart, default_chart, point_of
from desargues.projective.elements import Line, Point

from .conic import Conic


class IntersectionKind(str, Enum):
    TWO_POINTS = "two_points"
    DOUBLE_POINT = "double_point"
    COMPONENT_CONTAINED = "component_contained"


@dataclass(frozen=True)
class IntersectionResult:
    """Outcome of cutting a conic with a line.

    Over the reals "no intersection" shows up as ``TWO_POINTS`` with a
    negative ``radicand``.
    """

    kind: IntersectionKind
    restriction: BinaryQuadratic
    chart: LineChart
    points: tuple[Point, ...] = field(default_factory=tuple)
    radicand: int | None = None

    @property
    def is_tangent(self) -> bool:
        return self.kind is IntersectionKind.DOUBLE_POINT

    @property
    def is_real(self) -> bool:
        return self.radicand is None or self.radicand > 0


def restrict_to_line(conic: Conic, chart: LineChart) -> BinaryQuadratic:
    """Return the form whose roots are the chart parameters of ``conic ∩ line``."""
    m = conic.matrix
    r0, r1 = chart.r0.coords, chart.r1.coords
    return BinaryQuadratic(bilinear(m, r0, r0), bilinear(m, r0, r1), bilinear(m, r1, r1))


def intersect_line(conic: Conic, line: Line, chart: LineChart | None = None) -> IntersectionResult:
    chart = chart or default_chart(line)
    form = restrict_to_line(conic, chart)
    if form.is_zero:
        return IntersectionResult(IntersectionKind.COMPONENT_CONTAINED, form, chart)
    roots = quad_roots(form)
    if roots.double:
        return IntersectionResult(
            IntersectionKind.DOUBLE_POINT, form, chart, (point_of(chart, roots.first),)
        )
    points = (point_of(chart, roots.first), point_of(chart, roots.second))
    return IntersectionResult(IntersectionKind.TWO_POINTS, form, chart, points, roots.radicand)


def is_asymptote(conic: Conic, line: Line) -> bool:
    """True when ``line`` touches ``conic`` at a point at infinity."""
    if conic.is_degenerate:
        raise DegenerateConic(f"{conic} is degenerate")
    if line.is_at_infinity:
        return False
    result = intersect_line(conic, line)
    return result.is_tangent and result.points[0].is_infinite


__all__ = [
    "IntersectionKind",
    "IntersectionResult",
    "intersect_line",
    "is_asymptote",
    "restrict_to_line",
]
