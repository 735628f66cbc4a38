"""Conics through prescribed points, by exact null-space solves."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from desargues.arith.linalg import nullspace
from desargues.arith.quadext import Scalar
from desargues.errors import NoUniqueConic
from desargues.projective.elements import Point

from .conic import Conic

logger = logging.getLogger(__name__)


def _monomials(point: Point) -> tuple[Scalar, ...]:
    x, y, z = point.coords
    return (x * x, x * y, y * y, x * z, y * z, z * z)


def conic_through_points(points: Sequence[Point]) -> Conic:
    """Return the unique conic through five or more points."""
    if len(points) < 5:
        raise ValueError(f"expected at least 5 points, got {len(points)}")
    basis = nullspace([_monomials(p) for p in points], 6)
    if len(basis) != 1:
        raise NoUniqueConic(
            f"{len(basis)}-dimensional family of conics through "
            + ", ".join(str(p) for p in points)
        )
    conic = Conic(*basis[0])
    logger.debug("Fitted %s through %d points", conic, len(points))
    return conic


def conic_through_five(points: Sequence[Point]) -> Conic:
    """Return the unique conic through five points."""
    if len(points) != 5:
        raise NoUniqueConic(f"expected 5 points, got {len(points)}")
    return conic_through_points(points)


def circle_through(p: Point, q: Point, r: Point) -> Conic:
    """Return the circle ``x² + y² + d·xz + e·yz + f·z²`` through three points."""
    rows: list[tuple[Scalar, ...]] = []
    for point in (p, q, r):
        x, y, z = point.coords
        rows.append((x * x + y * y, x * z, y * z, z * z))
    basis = nullspace(rows, 4)
    if len(basis) != 1 or basis[0][0] == 0:
        raise NoUniqueConic(f"no unique circle through {p}, {q}, {r}")
    k, d, e, f = basis[0]
    return Conic(k, 0, k, d, e, f)


__all__ = ["circle_through", "conic_through_five", "conic_through_points"]
