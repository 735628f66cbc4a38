"""The pencil of conics through four points in general position."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from desargues.arith.binary import BinaryQuadratic, HomParam
from desargues.arith.linalg import mat_combine, nullspace
from desargues.arith.quadext import Scalar
from desargues.arith.scalar import simplify
from desargues.conics.conic import Conic, conic_from_line_pair, singular_point
from desargues.conics.intersection import restrict_to_line
from desargues.errors import BasePoint, LineThroughBasePoint, NotGeneralPosition
from desargues.involution.relation import InvolutionRel, involution_from_pairs
from desargues.projective.chart import LineChart, default_chart
from desargues.projective.elements import Line, Point, general_position, join, midpoint

logger = logging.getLogger(__name__)


class PencilParam(HomParam):
    """Coordinates ``(λ:μ)`` of the member ``λ·G1 + μ·G2``."""

    @property
    def lam(self) -> Scalar:
        return self.s

    @property
    def mu(self) -> Scalar:
        return self.t

    @classmethod
    def of(cls, param: HomParam) -> "PencilParam":
        return cls(param.s, param.t)


@dataclass(frozen=True)
class Pencil:
    """Conics through ``a, b, c, d`` with the degenerate basis precomputed.

    ``g1 = AB·CD``, ``g2 = AD·BC`` and ``g3 = AC·BD``; every member is
    ``λ·g1 + μ·g2`` and ``g3`` sits at ``g3_param``.
    """

    a: Point
    b: Point
    c: Point
    d: Point
    g1: Conic
    g2: Conic
    g3: Conic
    g3_param: PencilParam

    @property
    def base_points(self) -> tuple[Point, Point, Point, Point]:
        return (self.a, self.b, self.c, self.d)

    @property
    def sides(self) -> tuple[tuple[Point, Point], ...]:
        """The six sides in the order AB, AC, AD, BC, BD, CD."""
        return tuple(combinations(self.base_points, 2))

    def member(self, t: HomParam) -> Conic:
        return member(self, t)


def pencil_new(a: Point, b: Point, c: Point, d: Point) -> Pencil:
    if not general_position(a, b, c, d):
        raise NotGeneralPosition(f"{a}, {b}, {c}, {d} are not in general position")
    g1 = conic_from_line_pair(join(a, b), join(c, d))
    g2 = conic_from_line_pair(join(a, d), join(b, c))
    g3 = conic_from_line_pair(join(a, c), join(b, d))
    # columns are the three matrices flattened; the kernel is x·G1 + y·G2 + z·G3 = 0
    rows = [
        (g1.matrix[i][j], g2.matrix[i][j], g3.matrix[i][j])
        for i in range(3)
        for j in range(i, 3)
    ]
    (kernel,) = nullspace(rows, 3)
    x, y, _ = kernel
    g3_param = PencilParam(x, y)
    logger.debug("Pencil on %s, %s, %s, %s: G3 at %s", a, b, c, d, g3_param)
    return Pencil(a, b, c, d, g1, g2, g3, g3_param)


def member(p: Pencil, t: HomParam) -> Conic:
    """Return ``λ·G1 + μ·G2``."""
    return Conic.from_matrix(mat_combine(t.s, p.g1.matrix, t.t, p.g2.matrix))


def member_through(p: Pencil, point: Point) -> tuple[PencilParam, Conic]:
    """Return the unique member through ``point``."""
    e1 = p.g1.evaluate(point)
    e2 = p.g2.evaluate(point)
    if e1 == 0 and e2 == 0:
        raise BasePoint(f"every member of the pencil passes through {point}")
    t = PencilParam(e2, simplify(-e1))
    return t, member(p, t)


def degenerate_members(p: Pencil) -> tuple[tuple[PencilParam, Conic], ...]:
    return (
        (PencilParam(1, 0), p.g1),
        (PencilParam(0, 1), p.g2),
        (p.g3_param, p.g3),
    )


def diagonal_points(p: Pencil) -> tuple[Point, Point, Point]:
    """Vertices of the three line-pair members, in the order G1, G2, G3."""
    return (singular_point(p.g1), singular_point(p.g2), singular_point(p.g3))


def side_midpoints(p: Pencil) -> tuple[Point, ...]:
    return tuple(midpoint(u, v) for u, v in p.sides)


def check_admissible(p: Pencil, line: Line) -> None:
    for point in p.base_points:
        if point.lies_on(line):
            raise LineThroughBasePoint(f"{line} passes through base point {point}")


def member_restriction(p: Pencil, chart: LineChart, t: HomParam) -> BinaryQuadratic:
    return restrict_to_line(member(p, t), chart)


def desargues_involution(p: Pencil, line: Line) -> tuple[InvolutionRel, LineChart]:
    """Return the involution the pencil cuts on ``line`` and its chart.

    Built from the three line-pair members, whose pairs on ``line`` are
    rational whenever the inputs are.
    """
    check_admissible(p, line)
    chart = default_chart(line)
    q1, q2, q3 = (restrict_to_line(g, chart) for g in (p.g1, p.g2, p.g3))
    inv = involution_from_pairs(q1, q2, q3)
    logger.debug("Desargues involution on %s: %s", line, inv)
    return inv, chart


__all__ = [
    "Pencil",
    "PencilParam",
    "check_admissible",
    "degenerate_members",
    "desargues_involution",
    "diagonal_points",
    "member",
    "member_restriction",
    "member_through",
    "pencil_new",
    "side_midpoints",
]
