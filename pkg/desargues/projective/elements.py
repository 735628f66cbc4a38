"""Homogeneous points and lines of the projective plane."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from desargues.arith.linalg import cross, det3, dot, is_zero
from desargues.arith.quadext import Scalar
from desargues.arith.scalar import format_scalar, is_rational, normalize_projective, simplify
from desargues.errors import CoincidentLines, CoincidentPoints, PointAtInfinity, ZeroVector

Triple = tuple[Scalar, Scalar, Scalar]


@dataclass(frozen=True, init=False)
class ProjectiveElement:
    """A nonzero triple up to scale, stored in canonical form.

    Canonical form is the primitive integral representative with its first
    nonzero coordinate positive, so equality and hashing are structural.
    """

    coords: Triple

    def __init__(self, x: object, y: object, z: object = 1) -> None:
        try:
            a, b, c = normalize_projective((x, y, z))
        except ZeroVector as exc:
            raise ZeroVector(f"{type(self).__name__} needs a nonzero triple") from exc
        object.__setattr__(self, "coords", (a, b, c))

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> Scalar:
        return self.coords[index]

    def __len__(self) -> int:
        return 3

    @property
    def is_rational(self) -> bool:
        return all(is_rational(c) for c in self.coords)

    def __str__(self) -> str:
        return "(" + " : ".join(format_scalar(c) for c in self.coords) + ")"


class Point(ProjectiveElement):
    """A point ``(x : y : z)``; ``z == 0`` marks a point at infinity."""

    @classmethod
    def from_vector(cls, vec: tuple[Scalar, ...]) -> "Point":
        return cls(*vec)

    @property
    def x(self) -> Scalar:
        return self.coords[0]

    @property
    def y(self) -> Scalar:
        return self.coords[1]

    @property
    def z(self) -> Scalar:
        return self.coords[2]

    @property
    def is_infinite(self) -> bool:
        return self.coords[2] == 0

    def affine(self) -> tuple[Scalar, Scalar]:
        """Return ``(x/z, y/z)``."""
        if self.is_infinite:
            raise PointAtInfinity(f"{self} has no affine coordinates")
        x, y, z = self.coords
        return simplify(x / z), simplify(y / z)

    def direction(self) -> tuple[Scalar, Scalar]:
        """Direction vector of an infinite point (``(x, y)`` of the triple)."""
        return self.coords[0], self.coords[1]

    def lies_on(self, line: "Line") -> bool:
        return dot(self.coords, line.coords) == 0

    def join(self, other: "Point") -> "Line":
        return join(self, other)


class Line(ProjectiveElement):
    """The line ``l₁x + l₂y + l₃z = 0``."""

    @classmethod
    def from_vector(cls, vec: tuple[Scalar, ...]) -> "Line":
        return cls(*vec)

    @property
    def is_at_infinity(self) -> bool:
        return self.coords[0] == 0 and self.coords[1] == 0

    def contains(self, point: Point) -> bool:
        return point.lies_on(self)

    def meet(self, other: "Line") -> Point:
        return meet(self, other)

    def infinite_point(self) -> Point:
        """Return the point where the line meets the line at infinity."""
        if self.is_at_infinity:
            raise CoincidentLines("the line at infinity has no single infinite point")
        a, b, _ = self.coords
        return Point(b, -a, 0)

    def direction(self) -> tuple[Scalar, Scalar]:
        a, b, _ = self.coords
        return b, simplify(-a)

    def normal(self) -> tuple[Scalar, Scalar]:
        return self.coords[0], self.coords[1]


LINE_AT_INFINITY = Line(0, 0, 1)
ORIGIN = Point(0, 0, 1)


def join(p: Point, q: Point) -> Line:
    """Return the line through ``p`` and ``q``."""
    vec = cross(p.coords, q.coords)
    if is_zero(vec):
        raise CoincidentPoints(f"cannot join {p} with itself")
    return Line(*vec)


def meet(l: Line, m: Line) -> Point:  # noqa: E741
    """Return the common point of ``l`` and ``m``."""
    vec = cross(l.coords, m.coords)
    if is_zero(vec):
        raise CoincidentLines(f"cannot meet {l} with itself")
    return Point(*vec)


def collinear(p: Point, q: Point, r: Point) -> bool:
    return det3((p.coords, q.coords, r.coords)) == 0


def general_position(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True when the four points are distinct and no three are collinear."""
    points = (a, b, c, d)
    if len(set(points)) < 4:
        return False
    return not any(collinear(*triple) for triple in combinations(points, 3))


def midpoint(p: Point, q: Point) -> Point:
    """Affine midpoint of ``p`` and ``q``.

    When exactly one of them is infinite the result is that infinite point.
    """
    x1, y1, z1 = p.coords
    x2, y2, z2 = q.coords
    if z1 == 0 and z2 == 0:
        raise PointAtInfinity(f"{p} and {q} are both at infinity")
    return Point(x1 * z2 + x2 * z1, y1 * z2 + y2 * z1, 2 * z1 * z2)


def perpendicular(u: tuple[Scalar, Scalar], v: tuple[Scalar, Scalar]) -> bool:
    return dot(u, v) == 0


__all__ = [
    "LINE_AT_INFINITY",
    "ORIGIN",
    "Line",
    "Point",
    "ProjectiveElement",
    "collinear",
    "general_position",
    "join",
    "meet",
    "midpoint",
    "perpendicular",
]
