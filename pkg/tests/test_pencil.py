import pytest

from desargues.arith.binary import BinaryQuadratic, HomParam, quad_roots
from desargues.conics.conic import Conic
from desargues.errors import BasePoint, LineThroughBasePoint, NotGeneralPosition
from desargues.involution.relation import InvolutionRel, apolar, fixed_points
from desargues.pencil.pencil import (
    PencilParam,
    check_admissible,
    degenerate_members,
    desargues_involution,
    diagonal_points,
    member,
    member_restriction,
    member_through,
    pencil_new,
    side_midpoints,
)
from desargues.projective.elements import Line, Point

PARAMS = [PencilParam(*p) for p in ((1, 0), (0, 1), (1, 1), (2, -1), (3, 5), (-4, 7))]


def test_square_basis(square):
    assert square.g1 == Conic(0, 0, 1, 0, 0, -1)
    assert square.g2 == Conic(1, 0, 0, 0, 0, -1)
    assert square.g3 == Conic(1, 0, -1, 0, 0, 0)
    assert square.g3_param == PencilParam(1, -1)
    assert member(square, square.g3_param) == square.g3


def test_every_member_passes_through_base_points(generic):
    for t in PARAMS:
        conic = generic.member(t)
        assert all(conic.contains(p) for p in generic.base_points)


def test_square_circumcircle_is_a_member(square):
    assert member(square, PencilParam(1, 1)) == Conic(1, 0, 1, 0, 0, -2)


def test_member_through_point(square):
    t, conic = member_through(square, Point(0, "1/2"))
    assert t == PencilParam(4, -3)
    assert t.lam == 4 and t.mu == -3
    assert conic.contains(Point(0, "1/2"))
    assert conic == Conic(3, 0, -4, 0, 0, 1)
    with pytest.raises(BasePoint):
        member_through(square, Point(1, 1))


def test_pencil_needs_general_position():
    with pytest.raises(NotGeneralPosition):
        pencil_new(Point(0, 0), Point(1, 0), Point(2, 0), Point(0, 1))
    with pytest.raises(NotGeneralPosition):
        pencil_new(Point(0, 0), Point(0, 0), Point(2, 0), Point(0, 1))


def test_diagonal_points_of_square(square):
    assert diagonal_points(square) == (Point(1, 0, 0), Point(0, 1, 0), Point(0, 0))


def test_degenerate_members(square):
    members = degenerate_members(square)
    assert [t for t, _ in members] == [PencilParam(1, 0), PencilParam(0, 1), PencilParam(1, -1)]
    assert all(conic.is_degenerate for _, conic in members)


def test_side_midpoints_of_square(square):
    mids = side_midpoints(square)
    assert len(mids) == 6
    assert mids[0] == Point(0, 1)
    assert mids[1] == Point(0, 0)
    assert set(mids) == {Point(0, 1), Point(0, 0), Point(1, 0), Point(-1, 0), Point(0, -1)}


def test_line_through_base_point_is_rejected(square):
    with pytest.raises(LineThroughBasePoint):
        check_admissible(square, Line(0, 1, -1))
    with pytest.raises(LineThroughBasePoint):
        desargues_involution(square, Line(1, -1, 0))


def test_square_involution_on_x_axis(square, x_axis):
    inv, chart = desargues_involution(square, x_axis)
    assert inv == InvolutionRel(0, 1, 0)
    assert chart.r1 == Point(0, 0)
    roots = sorted(str(r) for r in fixed_points(inv))
    assert roots == ["0", "inf"]


def test_square_involution_with_irrational_fixed_points(square):
    inv, _ = desargues_involution(square, Line(1, -1, 3))
    assert inv == InvolutionRel(2, 3, 2)
    assert fixed_points(inv).radicand == 5


def test_square_involution_with_imaginary_fixed_points(square):
    inv, _ = desargues_involution(square, Line(2, -2, 3))
    assert inv == InvolutionRel(2, 3, 8)
    assert fixed_points(inv).is_imaginary
    assert fixed_points(inv).radicand == -7


def test_every_member_cuts_a_conjugate_pair(generic):
    line = Line(1, 2, -20)
    inv, chart = desargues_involution(generic, line)
    for t in PARAMS:
        assert apolar(member_restriction(generic, chart, t), inv.fixed_form) == 0


def test_fixed_points_are_tangency_points(square, x_axis):
    inv, chart = desargues_involution(square, x_axis)
    for root in fixed_points(inv):
        t, conic = member_through(square, chart.point(root))
        assert conic.contains(chart.point(root))
        assert quad_roots(member_restriction(square, chart, t)).double


def test_member_restriction_on_x_axis(square, x_axis):
    _, chart = desargues_involution(square, x_axis)
    restriction = member_restriction(square, chart, HomParam(1, 1))
    assert restriction == BinaryQuadratic(1, 0, -2)
    assert quad_roots(restriction).radicand == 2
