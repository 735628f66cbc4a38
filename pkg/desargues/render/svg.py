"""SVG figures of a scene.

Coordinates become floats only here. Pencil members are traced through
their rational parametrization from a base point; scene conics, which have
no known rational point, are traced by marching squares on a float grid.
The ``<metadata>`` element records which method drew each curve.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

import numpy as np
import numpy.typing as npt

from desargues.arith.binary import quad_roots
from desargues.arith.quadext import QuadExt, Scalar
from desargues.conics.conic import Conic
from desargues.errors import DesarguesError, EmptyViewport
from desargues.pencil.pencil import Pencil, PencilParam, desargues_involution, member
from desargues.projective.elements import Line, Point
from desargues.scene.model import Scene

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]

DEFAULT_SIZE = 640
DEFAULT_CURVE_SAMPLES = 720
DEFAULT_GRID = 240
DEFAULT_MEMBERS = (
    PencilParam(1, 1),
    PencilParam(2, 1),
    PencilParam(1, 2),
    PencilParam(1, -2),
    PencilParam(3, 1),
    PencilParam(1, 0),
    PencilParam(0, 1),
)
PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2")
FONT_FAMILY = "Inter, system-ui, Helvetica, Arial"


@dataclass(frozen=True)
class Viewport:
    """The affine window ``[xmin, xmax] × [ymin, ymax]`` drawn at ``width × height`` pixels."""

    xmin: float
    xmax: float
    ymin: float
    ymax: float
    width: int = DEFAULT_SIZE
    height: int = DEFAULT_SIZE

    def __post_init__(self) -> None:
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise EmptyViewport(
                f"viewport [{self.xmin}, {self.xmax}] × [{self.ymin}, {self.ymax}] is empty"
            )
        if self.width <= 0 or self.height <= 0:
            raise EmptyViewport(f"image size {self.width}×{self.height} is empty")

    @classmethod
    def parse(cls, text: str, width: int = DEFAULT_SIZE, height: int = DEFAULT_SIZE) -> "Viewport":
        """Parse ``"xmin,xmax,ymin,ymax"``."""
        try:
            xmin, xmax, ymin, ymax = (float(v) for v in text.split(","))
        except ValueError as exc:
            raise EmptyViewport(f"cannot read viewport {text!r}; expected xmin,xmax,ymin,ymax") from exc
        return cls(xmin, xmax, ymin, ymax, width, height)

    @classmethod
    def around(
        cls, points: Iterable[tuple[float, float]], width: int = DEFAULT_SIZE, height: int = DEFAULT_SIZE
    ) -> "Viewport":
        """Square window around ``points`` with a quarter of padding on each side."""
        coords = np.array(list(points), dtype=float).reshape(-1, 2)
        if coords.size == 0:
            return cls(-5.0, 5.0, -5.0, 5.0, width, height)
        low, high = coords.min(axis=0), coords.max(axis=0)
        mid = (low + high) / 2
        half = max(float((high - low).max()) / 2, 1.0) * 1.5
        return cls(mid[0] - half, mid[0] + half, mid[1] - half, mid[1] + half, width, height)

    def to_svg(self, x: float, y: float) -> tuple[float, float]:
        sx = (x - self.xmin) / (self.xmax - self.xmin) * self.width
        sy = (self.ymax - y) / (self.ymax - self.ymin) * self.height
        return sx, sy

    def contains(self, x: float, y: float, slack: float = 0.0) -> bool:
        dx = (self.xmax - self.xmin) * slack
        dy = (self.ymax - self.ymin) * slack
        return (
            self.xmin - dx <= x <= self.xmax + dx and self.ymin - dy <= y <= self.ymax + dy
        )


@dataclass
class RenderOptions:
    viewport: Viewport | None = None
    width: int = DEFAULT_SIZE
    height: int = DEFAULT_SIZE
    members: Sequence[PencilParam] = DEFAULT_MEMBERS
    curve_samples: int = DEFAULT_CURVE_SAMPLES
    grid: int = DEFAULT_GRID
    labels: bool = True


@dataclass
class RenderResult:
    svg: str
    curves: list[dict[str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def _float(value: Scalar) -> float | None:
    if isinstance(value, QuadExt) and value.d < 0 and value.b != 0:
        return None
    return float(value)


def affine_float(point: Point) -> tuple[float, float] | None:
    """Float affine coordinates, or ``None`` for infinite and imaginary points."""
    if point.is_infinite:
        return None
    x, y, z = (_float(c) for c in point.coords)
    if x is None or y is None or z is None:
        return None
    return x / z, y / z


def conic_matrix(conic: Conic) -> FloatArray:
    return np.array([[float(v) for v in row] for row in conic.matrix], dtype=float)


def parametrize_through(conic: Conic, base: Point, samples: int) -> FloatArray:
    """Points of ``conic`` on the lines through ``base`` at ``samples`` angles in ``[0, π)``.

    The second meet of ``base + s·D`` is ``(DᵀMD)·base − 2(baseᵀMD)·D``; the
    rows returned are homogeneous.
    """
    m = conic_matrix(conic)
    p = np.array([float(c) for c in base.coords])
    theta = np.linspace(0.0, np.pi, samples, endpoint=False)
    d = np.stack([np.cos(theta), np.sin(theta), np.zeros_like(theta)], axis=1)
    dmd = np.einsum("ij,jk,ik->i", d, m, d)
    pmd = d @ (m @ p)
    return dmd[:, None] * p[None, :] - 2.0 * pmd[:, None] * d


def _split_polylines(
    homogeneous: FloatArray, viewport: Viewport
) -> list[list[tuple[float, float]]]:
    """Cut a closed sampled curve wherever it leaves the window or passes infinity."""
    scale = np.abs(homogeneous).max(axis=1)
    finite = np.abs(homogeneous[:, 2]) > 1e-9 * np.maximum(scale, 1e-300)
    runs: list[list[tuple[float, float]]] = [[]]
    for row, ok in zip(homogeneous, finite):
        x = row[0] / row[2] if ok else np.inf
        y = row[1] / row[2] if ok else np.inf
        if ok and viewport.contains(x, y, slack=0.5):
            runs[-1].append(viewport.to_svg(x, y))
        elif runs[-1]:
            runs.append([])
    # the sampling is periodic in the angle, so an unbroken tail continues the head
    if len(runs) > 1 and runs[0] and runs[-1]:
        runs[0] = runs.pop() + runs[0]
    elif len(runs[0]) == len(homogeneous):
        runs[0].append(runs[0][0])
    return [run for run in runs if len(run) > 1]


def marching_squares(conic: Conic, viewport: Viewport, grid: int) -> list[tuple[tuple[float, float], tuple[float, float]]]:
    """Segments of the zero set of ``conic`` on a ``grid × grid`` lattice."""
    m = conic_matrix(conic)
    xs = np.linspace(viewport.xmin, viewport.xmax, grid + 1)
    ys = np.linspace(viewport.ymin, viewport.ymax, grid + 1)
    gx, gy = np.meshgrid(xs, ys)
    pts = np.stack([gx, gy, np.ones_like(gx)], axis=-1)
    values = np.einsum("...i,ij,...j->...", pts, m, pts)

    def crossing(x0: float, y0: float, f0: float, x1: float, y1: float, f1: float) -> tuple[float, float]:
        t = f0 / (f0 - f1)
        return viewport.to_svg(x0 + t * (x1 - x0), y0 + t * (y1 - y0))

    segments: list[tuple[tuple[float, float], tuple[float, float]]] = []
    signs = values > 0
    for j in range(grid):
        for i in range(grid):
            corners = (signs[j, i], signs[j, i + 1], signs[j + 1, i + 1], signs[j + 1, i])
            if all(corners) or not any(corners):
                continue
            x0, x1, y0, y1 = xs[i], xs[i + 1], ys[j], ys[j + 1]
            f = (values[j, i], values[j, i + 1], values[j + 1, i + 1], values[j + 1, i])
            xy = ((x0, y0), (x1, y0), (x1, y1), (x0, y1))
            hits = [
                crossing(*xy[k], f[k], *xy[(k + 1) % 4], f[(k + 1) % 4])
                for k in range(4)
                if corners[k] != corners[(k + 1) % 4]
            ]
            # saddle cells give four crossings; pair them in order
            for a in range(0, len(hits) - 1, 2):
                segments.append((hits[a], hits[a + 1]))
    return segments


def clip_line(line: Line, viewport: Viewport) -> tuple[tuple[float, float], tuple[float, float]] | None:
    """The visible segment of ``line``, or ``None`` if it misses the window."""
    if line.is_at_infinity:
        return None
    a, b, c = (_float(v) for v in line.coords)
    if a is None or b is None or c is None:
        return None
    hits: list[tuple[float, float]] = []
    if b != 0:
        for x in (viewport.xmin, viewport.xmax):
            y = -(a * x + c) / b
            if viewport.ymin <= y <= viewport.ymax:
                hits.append((x, y))
    if a != 0:
        for y in (viewport.ymin, viewport.ymax):
            x = -(b * y + c) / a
            if viewport.xmin <= x <= viewport.xmax:
                hits.append((x, y))
    unique = list(dict.fromkeys(hits))
    if len(unique) < 2:
        return None
    return viewport.to_svg(*unique[0]), viewport.to_svg(*unique[-1])


class _Canvas:
    def __init__(self, viewport: Viewport, title: str | None) -> None:
        self.viewport = viewport
        self.parts: list[str] = []
        self.curves: list[dict[str, str]] = []
        self.notes: list[str] = []
        self.title = title

    def polyline(self, points: Sequence[tuple[float, float]], color: str, width: float = 1.2) -> None:
        d = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
        self.parts.append(
            f'<polyline points="{d}" fill="none" stroke="{color}" stroke-width="{width}"/>'
        )

    def segments(self, segments: Sequence[tuple[tuple[float, float], tuple[float, float]]], color: str) -> None:
        if not segments:
            return
        d = " ".join(f"M{a[0]:.2f} {a[1]:.2f}L{b[0]:.2f} {b[1]:.2f}" for a, b in segments)
        self.parts.append(f'<path d="{d}" fill="none" stroke="{color}" stroke-width="1.2"/>')

    def marker(self, x: float, y: float, label: str | None, fill: str = "#222222") -> None:
        sx, sy = self.viewport.to_svg(x, y)
        self.parts.append(
            f'<circle cx="{sx:.2f}" cy="{sy:.2f}" r="3.5" fill="{fill}" stroke="#ffffff" stroke-width="0.8"/>'
        )
        if label:
            self.parts.append(
                f'<text x="{sx + 6:.2f}" y="{sy - 6:.2f}" font-size="12" fill="{fill}">{escape(label)}</text>'
            )

    def render(self) -> str:
        vp = self.viewport
        head = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{vp.width}" '
            f'height="{vp.height}" viewBox="0 0 {vp.width} {vp.height}">',
            f"<metadata>{escape(json.dumps({'curves': self.curves, 'notes': self.notes}, sort_keys=True))}</metadata>",
        ]
        if self.title:
            head.append(f"<title>{escape(self.title)}</title>")
        head.append(f'<rect x="0" y="0" width="{vp.width}" height="{vp.height}" fill="white"/>')
        head.append(f'<g font-family="{escape(FONT_FAMILY)}">')
        return "\n".join(head + self.parts + ["</g>", "</svg>", ""])


def _draw_member(canvas: _Canvas, p: Pencil, name: str, t: PencilParam, color: str, options: RenderOptions) -> None:
    conic = member(p, t)
    label = f"{name}({t.lam}:{t.mu})"
    if conic.is_degenerate:
        canvas.segments(marching_squares(conic, canvas.viewport, options.grid), color)
        canvas.curves.append({"curve": label, "method": "marching_squares"})
        return
    homogeneous = parametrize_through(conic, p.a, options.curve_samples)
    for run in _split_polylines(homogeneous, canvas.viewport):
        canvas.polyline(run, color)
    canvas.curves.append({"curve": label, "method": "rational_parametrization"})


def _draw_fixed_points(canvas: _Canvas, pencil_name: str, p: Pencil, line_name: str, line: Line) -> None:
    try:
        inv, chart = desargues_involution(p, line)
        roots = quad_roots(inv.fixed_form)
    except DesarguesError as exc:
        canvas.notes.append(f"{pencil_name} on {line_name}: {exc}")
        return
    if roots.is_imaginary:
        canvas.notes.append(
            f"{pencil_name} on {line_name}: fixed points are imaginary (d={roots.radicand}), not drawn"
        )
        return
    for root in roots:
        xy = affine_float(chart.point(root))
        if xy is not None:
            canvas.marker(*xy, None, fill="#d00000")


def render_scene(scene: Scene, options: RenderOptions | None = None) -> RenderResult:
    """Draw every point, line, pencil and conic of ``scene``."""
    options = options or RenderOptions()
    if options.curve_samples < 2 or options.grid < 1:
        raise EmptyViewport("curve sampling needs at least two samples and one grid cell")
    visible = {name: affine_float(pt) for name, pt in scene.points.items()}
    viewport = options.viewport or Viewport.around(
        (xy for xy in visible.values() if xy is not None), options.width, options.height
    )
    canvas = _Canvas(viewport, scene.description)

    for index, (name, p) in enumerate(scene.pencils.items()):
        for k, t in enumerate(options.members):
            _draw_member(canvas, p, name, t, PALETTE[(index + k) % len(PALETTE)], options)
    for name, conic in scene.conics.items():
        canvas.segments(marching_squares(conic, viewport, options.grid), "#555555")
        canvas.curves.append({"curve": name, "method": "marching_squares"})
    for name, line in scene.lines.items():
        segment = clip_line(line, viewport)
        if segment is None:
            canvas.notes.append(f"line {name} misses the viewport")
            continue
        (x1, y1), (x2, y2) = segment
        canvas.parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#000000" stroke-width="1.4"/>'
        )
        for pencil_name, p in scene.pencils.items():
            _draw_fixed_points(canvas, pencil_name, p, name, line)
    for name, xy in visible.items():
        if xy is None:
            canvas.notes.append(f"point {name} is at infinity, not drawn")
            continue
        canvas.marker(*xy, name if options.labels else None)

    logger.debug("Rendered %d curves, %d notes", len(canvas.curves), len(canvas.notes))
    return RenderResult(svg=canvas.render(), curves=canvas.curves, notes=canvas.notes)


__all__ = [
    "RenderOptions",
    "RenderResult",
    "Viewport",
    "affine_float",
    "clip_line",
    "marching_squares",
    "parametrize_through",
    "render_scene",
]
