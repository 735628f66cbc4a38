"""Conics stored as symmetric 3×3 matrices up to scale."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterator

from desargues.arith.linalg import (
    Matrix,
    adjugate3,
    bilinear,
    det2,
    det3,
    is_zero,
    mat_combine,
    mat_vec,
    nullspace,
    quadratic,
    rank,
    symmetric_outer,
)
from desargues.arith.quadext import QuadExt, Scalar
from desargues.arith.scalar import (
    format_scalar,
    normalize_projective,
    sign,
    simplify,
    squarefree_sqrt,
)
from desargues.errors import (
    CircleHasNoUniqueAxes,
    DegenerateConic,
    KernelPoint,
    NoCenter,
    NoUniquePole,
    ZeroVector,
)
from desargues.projective.elements import LINE_AT_INFINITY, Line, Point, join

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True, init=False)
class Conic:
    """The conic ``a·x² + b·xy + c·y² + d·xz + e·yz + f·z² = 0``.

    ``coefficients`` is the canonical primitive integral 6-tuple; the
    symmetric matrix carries the halved cross terms.
    """

    coefficients: tuple[Scalar, ...]

    def __init__(self, a: object, b: object, c: object, d: object, e: object, f: object) -> None:
        try:
            coeffs = normalize_projective((a, b, c, d, e, f))
        except ZeroVector as exc:
            raise ZeroVector("a conic needs a nonzero coefficient") from exc
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_coefficients(cls, coefficients: tuple[object, ...] | list[object]) -> "Conic":
        if len(coefficients) != 6:
            raise ValueError(f"a conic has 6 coefficients, got {len(coefficients)}")
        return cls(*coefficients)

    @classmethod
    def from_matrix(cls, m: Matrix) -> "Conic":
        if any(m[i][j] != m[j][i] for i in range(3) for j in range(i)):
            raise ValueError("conic matrix must be symmetric")
        return cls(
            m[0][0], 2 * m[0][1], m[1][1], 2 * m[0][2], 2 * m[1][2], m[2][2]
        )

    @cached_property
    def matrix(self) -> Matrix:
        a, b, c, d, e, f = self.coefficients
        hb, hd, he = (simplify(HALF * v) for v in (b, d, e))
        return ((a, hb, hd), (hb, c, he), (hd, he, f))

    @cached_property
    def rank(self) -> int:
        return rank(self.matrix)

    @property
    def is_degenerate(self) -> bool:
        return self.rank < 3

    @cached_property
    def det(self) -> Scalar:
        return det3(self.matrix)

    @property
    def affine_part(self) -> tuple[Scalar, Scalar, Scalar]:
        """Entries ``(m₁₁, m₁₂, m₂₂)`` of the quadratic part."""
        m = self.matrix
        return m[0][0], m[0][1], m[1][1]

    @property
    def is_circle(self) -> bool:
        m11, m12, m22 = self.affine_part
        return m12 == 0 and m11 == m22 and m11 != 0

    def evaluate(self, point: Point) -> Scalar:
        return quadratic(self.matrix, point.coords)

    def bilinear(self, p: Point, q: Point) -> Scalar:
        return bilinear(self.matrix, p.coords, q.coords)

    def contains(self, point: Point) -> bool:
        return self.evaluate(point) == 0

    def combine(self, k1: Scalar, other: "Conic", k2: Scalar) -> "Conic":
        """Return ``k1·self + k2·other`` with both at their canonical scale."""
        return Conic.from_matrix(mat_combine(k1, self.matrix, k2, other.matrix))

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.coefficients)

    def __str__(self) -> str:
        return "[" + ", ".join(format_scalar(c) for c in self.coefficients) + "]"


class ConicKind(str, Enum):
    ELLIPSE = "ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    DEGENERATE = "degenerate"


class DegenerateKind(str, Enum):
    LINE_PAIR = "line_pair"
    IMAGINARY_LINE_PAIR = "imaginary_line_pair"
    DOUBLE_LINE = "double_line"


@dataclass(frozen=True)
class AffineClass:
    kind: ConicKind
    rectangular: bool = False
    degenerate: DegenerateKind | None = None
    real: bool = True

    def __str__(self) -> str:
        if self.degenerate is not None:
            return f"degenerate({self.degenerate.value})"
        label = self.kind.value
        if self.rectangular:
            label = f"rectangular {label}"
        if not self.real:
            label = f"imaginary {label}"
        return label


def conic_from_line_pair(l: Line, m: Line) -> Conic:  # noqa: E741
    """Return the degenerate conic ``l ∪ m`` (a double line when ``l == m``)."""
    return Conic.from_matrix(symmetric_outer(l.coords, m.coords))


def polar(conic: Conic, point: Point) -> Line:
    vec = mat_vec(conic.matrix, point.coords)
    if is_zero(vec):
        raise KernelPoint(f"{point} is a singular point of {conic}")
    return Line(*vec)


def pole(conic: Conic, line: Line) -> Point:
    """Return ``adj(M)·l``; for a line pair this is its vertex when ``l`` misses it."""
    vec = mat_vec(adjugate3(conic.matrix), line.coords)
    if is_zero(vec):
        raise NoUniquePole(f"{line} has no unique pole with respect to {conic}")
    return Point(*vec)


def center(conic: Conic) -> tuple[Point, bool]:
    """Return the pole of the line at infinity and whether it is affine."""
    if conic.is_degenerate:
        raise NoUniquePole(f"{conic} is degenerate and has no center")
    point = pole(conic, LINE_AT_INFINITY)
    return point, not point.is_infinite


def singular_point(conic: Conic) -> Point:
    """Return the vertex of a rank-2 conic."""
    if conic.rank != 2:
        raise DegenerateConic(f"{conic} has rank {conic.rank}, expected 2")
    (kernel,) = nullspace(conic.matrix, 3)
    return Point(*kernel)


def classify_affine(conic: Conic) -> AffineClass:
    m11, m12, m22 = conic.affine_part
    if conic.rank == 1:
        return AffineClass(ConicKind.DEGENERATE, degenerate=DegenerateKind.DOUBLE_LINE)
    if conic.rank == 2:
        m = conic.matrix
        # sum of principal 2×2 minors is the product of the nonzero eigenvalues
        minors = simplify(
            det2(m[0][0], m[0][1], m[1][0], m[1][1])
            + det2(m[0][0], m[0][2], m[2][0], m[2][2])
            + det2(m[1][1], m[1][2], m[2][1], m[2][2])
        )
        kind = (
            DegenerateKind.LINE_PAIR if sign(minors) < 0 else DegenerateKind.IMAGINARY_LINE_PAIR
        )
        return AffineClass(
            ConicKind.DEGENERATE, degenerate=kind, real=kind is DegenerateKind.LINE_PAIR
        )
    delta = sign(det2(m11, m12, m12, m22))
    if delta < 0:
        return AffineClass(ConicKind.HYPERBOLA, rectangular=simplify(m11 + m22) == 0)
    if delta == 0:
        return AffineClass(ConicKind.PARABOLA)
    # definite quadratic part: real iff det(M) has the opposite sign to m₁₁
    real = sign(conic.det) * sign(m11) < 0
    return AffineClass(ConicKind.ELLIPSE, real=real)


def tangent_at(conic: Conic, point: Point) -> Line:
    if not conic.contains(point):
        raise ValueError(f"{point} is not on {conic}")
    return polar(conic, point)


def axes(conic: Conic) -> tuple[Line, Line]:
    """Return the two axes of a central, non-circular conic.

    Axes run along the eigen-directions of the quadratic part, which may
    need Q(√d) with ``d`` the square class of ``(m₁₁−m₂₂)² + 4m₁₂²``.
    """
    if conic.is_degenerate:
        raise DegenerateConic(f"{conic} is degenerate")
    m11, m12, m22 = conic.affine_part
    if m12 == 0 and m11 == m22:
        raise CircleHasNoUniqueAxes(f"{conic} is a circle")
    middle, proper = center(conic)
    if not proper:
        raise NoCenter(f"{conic} is a parabola; its center is at infinity")
    if m12 == 0:
        directions: list[tuple[Scalar, Scalar]] = [
            (Fraction(1), Fraction(0)),
            (Fraction(0), Fraction(1)),
        ]
    else:
        root = squarefree_sqrt(simplify((m11 - m22) ** 2 + 4 * m12 * m12))
        directions = [
            (simplify(2 * m12), simplify(m22 - m11 + root)),
            (simplify(2 * m12), simplify(m22 - m11 - root)),
        ]
    lines = tuple(join(middle, Point(dx, dy, 0)) for dx, dy in directions)
    if any(isinstance(c, QuadExt) for line in lines for c in line.coords):
        logger.debug("Axes of %s need a quadratic extension", conic)
    return lines[0], lines[1]


__all__ = [
    "AffineClass",
    "Conic",
    "ConicKind",
    "DegenerateKind",
    "axes",
    "center",
    "classify_affine",
    "conic_from_line_pair",
    "polar",
    "pole",
    "singular_point",
    "tangent_at",
]
