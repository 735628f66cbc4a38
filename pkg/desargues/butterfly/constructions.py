"""Build pencil members and lines that satisfy a butterfly hypothesis."""

from __future__ import annotations

import logging

from desargues.arith.linalg import nullspace
from desargues.arith.quadext import Scalar
from desargues.conics.conic import Conic, center, polar
from desargues.errors import (
    KernelPoint,
    LineThroughBasePoint,
    NoSuchConfiguration,
    NotConcyclic,
)
from desargues.pencil.pencil import Pencil, PencilParam, check_admissible, member, member_through
from desargues.projective.elements import ORIGIN, Line, Point, join

from .sampling import farey_params

logger = logging.getLogger(__name__)

AXIS_SEARCH = 32


def circle_member(p: Pencil) -> tuple[PencilParam, Conic]:
    """Return the circle through the four base points.

    Solves ``m₁₁ = m₂₂`` and ``m₁₂ = 0`` for ``λ·G1 + μ·G2``.
    """
    g1, g2 = p.g1.matrix, p.g2.matrix
    rows = [
        (g1[0][0] - g1[1][1], g2[0][0] - g2[1][1]),
        (g1[0][1], g2[0][1]),
    ]
    basis = nullspace(rows, 2)
    if len(basis) != 1:
        raise NotConcyclic(f"base points {', '.join(map(str, p.base_points))} are not concyclic")
    lam, mu = basis[0]
    param = PencilParam(lam, mu)
    conic = member(p, param)
    m11, _, _ = conic.affine_part
    if m11 == 0 or conic.is_degenerate:
        raise NotConcyclic(f"the member {conic} with equal quadratic terms is not a circle")
    return param, conic


def line_with_infinite_fixed_point(
    p: Pencil, direction: tuple[Scalar, Scalar], *, through: Point = ORIGIN
) -> Line:
    """Return a line of the given direction whose infinite point is a fixed point.

    It is the tangent at ``N = (dx:dy:0)`` to the member through ``N``, so that
    member cuts the line in the double point ``N``. When that member is a line
    pair with vertex ``N`` every line of the direction qualifies and the one
    through ``through`` is returned.
    """
    dx, dy = direction
    n = Point(dx, dy, 0)
    param, conic = member_through(p, n)
    try:
        line = polar(conic, n)
    except KernelPoint:
        if through.is_infinite:
            raise NoSuchConfiguration(
                f"{n} is the vertex of {conic}; give an affine point to fix the line"
            ) from None
        line = join(through, n)
    if line.is_at_infinity:
        raise NoSuchConfiguration(f"the member {conic} through {n} touches the line at infinity")
    try:
        check_admissible(p, line)
    except LineThroughBasePoint as exc:
        raise NoSuchConfiguration(str(exc)) from exc
    logger.debug("Line %s has %s as a fixed point (member %s)", line, n, param)
    return line


def _is_central(conic: Conic) -> bool:
    if conic.is_degenerate or conic.is_circle:
        return False
    _, proper = center(conic)
    return proper


def axis_aligned_member(p: Pencil) -> PencilParam:
    """Return a central, non-circular member with no ``xy`` term."""
    g1, g2 = p.g1.matrix, p.g2.matrix
    if g1[0][1] != 0 or g2[0][1] != 0:
        param = PencilParam(g2[0][1], -g1[0][1])
        if not _is_central(member(p, param)):
            raise NoSuchConfiguration(f"the axis-aligned member {param} has no proper center")
        return param
    for param in farey_params(AXIS_SEARCH):
        if _is_central(member(p, param)):
            return param
    raise NoSuchConfiguration("no central non-circular member found")


__all__ = [
    "axis_aligned_member",
    "circle_member",
    "line_with_infinite_fixed_point",
]
