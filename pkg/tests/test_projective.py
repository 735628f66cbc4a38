import pytest

from desargues.arith.binary import INFINITY, HomParam
from desargues.errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateRange,
    IndeterminateCrossRatio,
    PointAtInfinity,
    PointOffLine,
)
from desargues.projective.chart import (
    LineChart,
    cross_ratio,
    default_chart,
    harmonic_conjugate,
    is_harmonic,
)
from desargues.projective.elements import (
    LINE_AT_INFINITY,
    Line,
    Point,
    collinear,
    general_position,
    join,
    meet,
    midpoint,
)


def test_points_are_stored_canonically():
    assert Point(2, 4, 2) == Point(1, 2, 1)
    assert Point(-1, 0, 0) == Point(1, 0, 0)
    assert hash(Point(3, 6, 3)) == hash(Point(1, 2, 1))


def test_join_and_meet():
    line = join(Point(0, 0), Point(1, 1))
    assert line == Line(1, -1, 0)
    assert meet(line, Line(0, 1, -2)) == Point(2, 2)
    with pytest.raises(CoincidentPoints):
        join(Point(1, 1), Point(2, 2, 2))
    with pytest.raises(CoincidentLines):
        meet(line, Line(-2, 2, 0))


def test_parallel_lines_meet_at_infinity():
    point = meet(Line(0, 1, 0), Line(0, 1, -1))
    assert point.is_infinite
    assert point == Point(1, 0, 0)
    with pytest.raises(PointAtInfinity):
        point.affine()


def test_infinite_point_and_direction():
    line = Line(1, 1, -5)
    assert line.infinite_point() == Point(1, -1, 0)
    assert line.infinite_point().lies_on(line)
    with pytest.raises(CoincidentLines):
        LINE_AT_INFINITY.infinite_point()


def test_general_position():
    a, b, c, d = Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1)
    assert general_position(a, b, c, d)
    assert not general_position(a, b, Point(2, 0), d)
    assert not general_position(a, a, c, d)
    assert collinear(a, b, Point(5, 0))


def test_midpoint():
    assert midpoint(Point(0, 0), Point(2, 4)).affine() == (1, 2)
    assert midpoint(Point(0, 0), Point(1, 0, 0)) == Point(1, 0, 0)
    with pytest.raises(PointAtInfinity):
        midpoint(Point(1, 0, 0), Point(0, 1, 0))


def test_default_chart_uses_affine_coordinate():
    chart = default_chart(Line(0, 1, 0))
    assert chart.r0 == Point(1, 0, 0)
    assert chart.r1 == Point(0, 0, 1)
    assert chart.param(Point(3, 0)) == HomParam(3)
    assert chart.point(HomParam(-2)) == Point(-2, 0)
    assert chart.param(Point(1, 0, 0)).value is INFINITY


def test_default_chart_on_vertical_line_falls_back_to_x_axis():
    chart = default_chart(Line(1, 0, 0))
    assert chart.r0 == Point(0, 1, 0)
    assert chart.r1 == Point(0, 0, 1)


def test_default_chart_on_line_at_infinity():
    chart = default_chart(LINE_AT_INFINITY)
    assert chart.r0 == Point(0, 1, 0)
    assert chart.r1 == Point(1, 0, 0)


def test_chart_rejects_points_off_line():
    chart = default_chart(Line(0, 1, 0))
    with pytest.raises(PointOffLine):
        chart.param(Point(0, 1))
    with pytest.raises(PointOffLine):
        LineChart(Line(0, 1, 0), Point(1, 0, 0), Point(0, 1))
    with pytest.raises(CoincidentPoints):
        LineChart(Line(0, 1, 0), Point(1, 0), Point(1, 0))


def test_chart_roundtrip_on_slanted_line():
    line = Line(1, 1, -5)
    chart = default_chart(line)
    for x in range(-3, 4):
        point = Point(x, 5 - x)
        assert chart.point(chart.param(point)) == point


def test_harmonic_conjugate():
    assert harmonic_conjugate(HomParam(1), HomParam(0), HomParam(3)) == HomParam(-3)
    # the harmonic conjugate of infinity is the midpoint
    assert harmonic_conjugate(HomParam.infinity(), HomParam(1), HomParam(5)) == HomParam(3)
    with pytest.raises(DegenerateRange):
        harmonic_conjugate(HomParam(1), HomParam(2), HomParam(2))
    with pytest.raises(DegenerateRange):
        harmonic_conjugate(HomParam(2), HomParam(2), HomParam(5))


def test_cross_ratio():
    p = [HomParam(v) for v in (1, -3, 0, 3)]
    assert cross_ratio(*p) == -1
    assert is_harmonic(*p)
    assert cross_ratio(HomParam(0), HomParam(1), HomParam(2), HomParam(0)) is INFINITY
    with pytest.raises(IndeterminateCrossRatio):
        cross_ratio(HomParam(0), HomParam(0), HomParam(0), HomParam(1))
    assert not is_harmonic(HomParam(0), HomParam(0), HomParam(0), HomParam(1))
