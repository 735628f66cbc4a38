"""Conics: polarity, centers, intersections with lines and fitting."""

from .conic import (
    AffineClass,
    Conic,
    ConicKind,
    DegenerateKind,
    axes,
    center,
    classify_affine,
    conic_from_line_pair,
    polar,
    pole,
    singular_point,
    tangent_at,
)
from .fitting import circle_through, conic_through_five, conic_through_points
from .intersection import (
    IntersectionKind,
    IntersectionResult,
    intersect_line,
    is_asymptote,
    restrict_to_line,
)

__all__ = [
    "AffineClass",
    "Conic",
    "ConicKind",
    "DegenerateKind",
    "IntersectionKind",
    "IntersectionResult",
    "axes",
    "center",
    "circle_through",
    "classify_affine",
    "conic_from_line_pair",
    "conic_through_five",
    "conic_through_points",
    "intersect_line",
    "is_asymptote",
    "polar",
    "pole",
    "restrict_to_line",
    "singular_point",
    "tangent_at",
]
