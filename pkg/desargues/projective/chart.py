"""Coordinates on a line: charts, cross-ratio and harmonic conjugates."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from desargues.arith.binary import INFINITY, BinaryQuadratic, HomParam, Infinity
from desargues.arith.linalg import combine, cross
from desargues.arith.quadext import Scalar
from desargues.arith.scalar import simplify
from desargues.errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateRange,
    IndeterminateCrossRatio,
    PointOffLine,
)

from .elements import Line, Point, meet

logger = logging.getLogger(__name__)

LINE_X0 = Line(1, 0, 0)
LINE_Y0 = Line(0, 1, 0)


@dataclass(frozen=True)
class LineChart:
    """Parametrization ``(s:t) ↦ s·R0 + t·R1`` of ``line``.

    ``R0`` has parameter ``(1:0)`` (value ∞) and ``R1`` has ``(0:1)``
    (value 0).
    """

    line: Line
    r0: Point
    r1: Point

    def __post_init__(self) -> None:
        if self.r0 == self.r1:
            raise CoincidentPoints(f"chart base points coincide at {self.r0}")
        for point in (self.r0, self.r1):
            if not point.lies_on(self.line):
                raise PointOffLine(f"{point} is not on {self.line}")

    def param(self, point: Point) -> HomParam:
        return chart_param(self, point)

    def point(self, u: HomParam) -> Point:
        return point_of(self, u)


def default_chart(line: Line) -> LineChart:
    """Return the deterministic chart used by every report.

    For an affine line ``R0`` is its infinite point and ``R1`` the meet
    with ``x = 0``, or with ``y = 0`` when that meet is ``R0`` again, so the
    value ``s/t`` is an affine coordinate along the line. The line at
    infinity uses ``R0 = (0:1:0)`` and ``R1 = (1:0:0)``.
    """
    if line.is_at_infinity:
        return LineChart(line, Point(0, 1, 0), Point(1, 0, 0))
    r0 = line.infinite_point()
    for axis in (LINE_X0, LINE_Y0):
        try:
            r1 = meet(line, axis)
        except CoincidentLines:
            continue
        if r1 != r0:
            logger.debug("Default chart on %s: R0=%s R1=%s", line, r0, r1)
            return LineChart(line, r0, r1)
    raise AssertionError(f"no affine base point found on {line}")  # pragma: no cover


def chart_param(chart: LineChart, point: Point) -> HomParam:
    """Return the parameter of ``point`` in ``chart``."""
    if not point.lies_on(chart.line):
        raise PointOffLine(f"{point} is not on {chart.line}")
    w = cross(chart.r0.coords, chart.r1.coords)
    k = next(i for i, value in enumerate(w) if value != 0)
    # P = s·R0 + t·R1 gives P×R1 = s·w and R0×P = t·w
    s = cross(point.coords, chart.r1.coords)[k] / w[k]
    t = cross(chart.r0.coords, point.coords)[k] / w[k]
    return HomParam(simplify(s), simplify(t))


def point_of(chart: LineChart, u: HomParam) -> Point:
    return Point(*combine(u.s, chart.r0.coords, u.t, chart.r1.coords))


def cross_ratio(
    p1: HomParam, p2: HomParam, p3: HomParam, p4: HomParam
) -> Scalar | Infinity:
    """Return ``[13][24] / [14][23]`` with ``[pq] = s_p·t_q − s_q·t_p``.

    The value is ``-1`` exactly when ``p1, p2`` separate ``p3, p4``
    harmonically. A vanishing denominator gives :data:`INFINITY`.
    """
    num = p1.bracket(p3) * p2.bracket(p4)
    den = p1.bracket(p4) * p2.bracket(p3)
    if den == 0:
        if num == 0:
            raise IndeterminateCrossRatio(
                f"cross ratio of {p1}, {p2}; {p3}, {p4} is 0/0"
            )
        return INFINITY
    return simplify(num / den)


def harmonic_conjugate(m: HomParam, p: HomParam, q: HomParam) -> HomParam:
    """Return the ``n`` with ``cross_ratio(m, n; p, q) == -1``."""
    if p == q:
        raise DegenerateRange(f"harmonic conjugate needs two distinct points, got {p} twice")
    if m in (p, q):
        raise DegenerateRange(f"{m} coincides with one of {p}, {q}")
    # n is the polar of m with respect to the pair {p, q}
    return BinaryQuadratic.from_roots(p, q).partner(m)


def is_harmonic(p1: HomParam, p2: HomParam, p3: HomParam, p4: HomParam) -> bool:
    try:
        return cross_ratio(p1, p2, p3, p4) == -1
    except IndeterminateCrossRatio:
        return False


__all__ = [
    "LineChart",
    "chart_param",
    "cross_ratio",
    "default_chart",
    "harmonic_conjugate",
    "is_harmonic",
    "point_of",
]
