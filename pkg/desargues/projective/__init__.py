"""Points, lines and line charts of the projective plane."""

from desargues.arith.binary import INFINITY, HomParam, Infinity

from .chart import (
    LineChart,
    chart_param,
    cross_ratio,
    default_chart,
    harmonic_conjugate,
    is_harmonic,
    point_of,
)
from .elements import (
    LINE_AT_INFINITY,
    ORIGIN,
    Line,
    Point,
    collinear,
    general_position,
    join,
    meet,
    midpoint,
    perpendicular,
)

__all__ = [
    "INFINITY",
    "LINE_AT_INFINITY",
    "ORIGIN",
    "HomParam",
    "Infinity",
    "Line",
    "LineChart",
    "Point",
    "chart_param",
    "collinear",
    "cross_ratio",
    "default_chart",
    "general_position",
    "harmonic_conjugate",
    "is_harmonic",
    "join",
    "meet",
    "midpoint",
    "perpendicular",
    "point_of",
]
