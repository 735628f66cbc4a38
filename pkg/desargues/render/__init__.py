"""Float rendering of scenes to SVG."""

from .svg import (
    RenderOptions,
    RenderResult,
    Viewport,
    affine_float,
    clip_line,
    marching_squares,
    parametrize_through,
    render_scene,
)

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
