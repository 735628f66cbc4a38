import json
import xml.etree.ElementTree as ET

import pytest

from desargues.errors import EmptyViewport
from desargues.projective.elements import Line
from desargues.render.svg import RenderOptions, Viewport, clip_line, render_scene
from desargues.scene.model import parse_scene

from conftest import SQUARE_SCENE

SVG = "{http://www.w3.org/2000/svg}"


def _metadata(svg: str) -> dict:
    root = ET.fromstring(svg.encode("utf-8"))
    return json.loads(root.find(f"{SVG}metadata").text)


def test_render_square_scene():
    result = render_scene(parse_scene(SQUARE_SCENE))
    root = ET.fromstring(result.svg.encode("utf-8"))
    assert root.tag == f"{SVG}svg"
    assert root.find(f"{SVG}title").text == "unit square"
    markers = root.findall(f".//{SVG}circle")
    assert len(markers) >= 6
    labels = {t.text for t in root.iter(f"{SVG}text")}
    assert {"A", "B", "C", "D", "O", "H"} <= labels
    assert len(root.findall(f".//{SVG}line")) == 3


def test_metadata_lists_curves_and_methods():
    result = render_scene(parse_scene(SQUARE_SCENE))
    meta = _metadata(result.svg)
    assert meta["curves"] == result.curves
    methods = {c["curve"]: c["method"] for c in meta["curves"]}
    assert methods["P(1:1)"] == "rational_parametrization"
    assert methods["P(1:0)"] == "marching_squares"
    assert methods["P(0:1)"] == "marching_squares"
    assert len(methods) == 7


def test_render_without_labels():
    result = render_scene(parse_scene(SQUARE_SCENE), RenderOptions(labels=False))
    root = ET.fromstring(result.svg.encode("utf-8"))
    assert root.findall(f".//{SVG}text") == []


def test_imaginary_fixed_points_are_noted():
    data = dict(SQUARE_SCENE, lines={"I": {"coefficients": [2, -2, 3]}})
    result = render_scene(parse_scene(data))
    assert any("P on I" in note and "imaginary" in note for note in result.notes)
    assert result.notes == _metadata(result.svg)["notes"]


def test_points_at_infinity_and_far_lines_are_noted():
    data = {
        "points": {"A": [0, 0, 1], "E": [1, 0, 0]},
        "lines": {"far": {"coefficients": [0, 1, -5]}},
    }
    options = RenderOptions(viewport=Viewport.parse("-1,1,-1,1"))
    result = render_scene(parse_scene(data), options)
    assert "point E is at infinity, not drawn" in result.notes
    assert "line far misses the viewport" in result.notes


def test_render_is_deterministic():
    scene = parse_scene(SQUARE_SCENE)
    assert render_scene(scene).svg == render_scene(scene).svg


def test_viewport_parse_and_around():
    vp = Viewport.parse("-2,2,-1,3", width=100, height=50)
    assert (vp.xmin, vp.xmax, vp.ymin, vp.ymax) == (-2.0, 2.0, -1.0, 3.0)
    assert vp.to_svg(-2, 3) == (0.0, 0.0)
    assert vp.to_svg(2, -1) == (100.0, 50.0)
    around = Viewport.around([(-1.0, -1.0), (1.0, 1.0)])
    assert (around.xmin, around.xmax) == (-1.5, 1.5)
    assert Viewport.around([]).xmax == 5.0


@pytest.mark.parametrize("text", ["1,0,0,1", "0,1,2,2", "a,b,c,d", "0,1,0"])
def test_bad_viewports(text):
    with pytest.raises(EmptyViewport):
        Viewport.parse(text)


def test_bad_sizes_and_sampling():
    with pytest.raises(EmptyViewport):
        Viewport(0, 1, 0, 1, width=0)
    with pytest.raises(EmptyViewport):
        render_scene(parse_scene(SQUARE_SCENE), RenderOptions(curve_samples=1))
    with pytest.raises(EmptyViewport):
        render_scene(parse_scene(SQUARE_SCENE), RenderOptions(grid=0))


def test_clip_line():
    vp = Viewport.parse("-1,1,-1,1", width=2, height=2)
    assert clip_line(Line(0, 1, 0), vp) == ((0.0, 1.0), (2.0, 1.0))
    assert clip_line(Line(0, 1, -5), vp) is None
    assert clip_line(Line(0, 0, 1), vp) is None
