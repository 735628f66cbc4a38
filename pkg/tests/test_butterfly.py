import pytest

from desargues.arith.binary import BinaryQuadratic, HomParam
from desargues.butterfly import (
    MemberCase,
    Verdict,
    axis_aligned_member,
    circle_member,
    classify_member,
    line_with_infinite_fixed_point,
    scenario_axis,
    scenario_circle,
    scenario_diagonal,
    scenario_diameter,
    scenario_klamkin,
    verify_prop1,
    verify_prop2,
)
from desargues.conics.conic import Conic
from desargues.errors import (
    EquidistanceFails,
    FixedPointMismatch,
    MismatchAgainstDesargues,
    NoProperCenter,
    NoSuchConfiguration,
    NotConcyclic,
    NotPerpendicular,
    NotThroughDiagonalPoint,
)
from desargues.pencil.pencil import PencilParam, pencil_new
from desargues.projective.elements import Line, Point

VERTICAL_HALF = Line(2, 0, -1)
SLANTED = Line(1, -1, 3)


def test_classify_member():
    assert classify_member(BinaryQuadratic(0, 0, 0)) is MemberCase.CONTAINED
    assert classify_member(BinaryQuadratic(1, 0, 0)) is MemberCase.SINGLE_POINT
    assert classify_member(BinaryQuadratic(1, 0, -1)) is MemberCase.DISTINCT_PAIR
    assert classify_member(BinaryQuadratic(1, 0, 1)) is MemberCase.NO_REAL_POINTS


def test_prop1_on_square(square, x_axis):
    report = verify_prop1(square, x_axis)
    assert report.verdict is Verdict.PASS
    assert len(report.members) == 8
    assert all(m.apolarity == 0 for m in report.members)
    assert sorted(str(r) for r in report.fixed_points) == ["0", "inf"]
    assert report.flags["midpoint_interpretation"]
    assert report.checks["harmonic_conjugate_matches"]
    assert report.details["midpoint"] == Point(0, 0)
    assert all(t.touches for t in report.tangent_members)
    assert {t.param for t in report.tangent_members} == {PencilParam(1, 0), PencilParam(1, -1)}


def test_prop1_reports_every_case(square, x_axis):
    samples = [PencilParam(1, -1), PencilParam(0, 1), PencilParam(-2, 1)]
    cases = [m.case for m in verify_prop1(square, x_axis, samples).members]
    assert cases == [
        MemberCase.SINGLE_POINT,
        MemberCase.DISTINCT_PAIR,
        MemberCase.NO_REAL_POINTS,
    ]


def test_prop1_with_imaginary_fixed_points(square):
    report = verify_prop1(square, Line(2, -2, 3))
    assert report.verdict is Verdict.PASS
    assert report.radicand == -7
    assert any("imaginary" in note for note in report.notes)
    assert not report.flags["midpoint_interpretation"]


def test_prop1_on_generic_pencil(generic):
    report = verify_prop1(generic, Line(1, 2, -20))
    assert report.verdict is Verdict.PASS


def test_failed_harmonic_check_fails_the_verdict(square, x_axis):
    report = verify_prop1(square, x_axis)
    assert report.verdict is Verdict.PASS
    report.checks["harmonic_conjugate_matches"] = False
    assert report.verdict is Verdict.FAIL


def test_report_to_dict_is_json_ready(square, x_axis):
    data = verify_prop1(square, x_axis).to_dict()
    assert data["verdict"] == "pass"
    assert data["scenario"] == "prop1"
    assert data["involution"] == ["0", "1", "0"]
    assert sorted(data["fixed_points"]["roots"]) == ["0", "inf"]


def test_prop2_recovers_involution(square, x_axis):
    qa = BinaryQuadratic(1, 0, -1)
    qb = BinaryQuadratic(1, 0, -2)
    report = verify_prop2(square, x_axis, qa, qb)
    assert report.verdict is Verdict.PASS
    assert report.checks == {
        "harmonic_conjugate_matches": True,
        "pair_a_harmonic": True,
        "pair_b_harmonic": True,
    }


def test_prop2_accepts_imaginary_pair(square, x_axis):
    report = verify_prop2(square, x_axis, BinaryQuadratic(1, 0, 1), BinaryQuadratic(1, 0, -1))
    assert report.verdict is Verdict.PASS
    assert any("imaginary pair" in note for note in report.notes)


def test_prop2_mismatch(square, x_axis):
    other = BinaryQuadratic.from_roots(HomParam(2), HomParam(3))
    with pytest.raises(MismatchAgainstDesargues):
        verify_prop2(square, x_axis, BinaryQuadratic(1, 0, -1), other)


def test_klamkin(square, x_axis):
    report = scenario_klamkin(square, x_axis)
    assert report.verdict is Verdict.PASS
    assert report.details["midpoint"] == Point(0, 0)
    assert report.details["witness_members"] == [PencilParam(0, 1), PencilParam(1, 1)]


def test_klamkin_needs_common_midpoint(square):
    with pytest.raises(NoSuchConfiguration):
        scenario_klamkin(square, SLANTED)
    with pytest.raises(NoSuchConfiguration):
        scenario_klamkin(square, Line(0, 0, 1))


def test_circle_member(square, generic):
    param, conic = circle_member(square)
    assert param == PencilParam(1, 1)
    assert conic == Conic(1, 0, 1, 0, 0, -2)
    with pytest.raises(NotConcyclic):
        circle_member(generic)


def test_circle_scenario(square, x_axis):
    report = scenario_circle(square, x_axis)
    assert report.verdict is Verdict.PASS
    assert report.details["foot"] == Point(0, 0)
    assert report.details["center"] == Point(0, 0)
    assert report.checks["asymptote_member"]
    assert any("degenerate" in note for note in report.notes)


def test_circle_scenario_without_equidistant_chord(square):
    with pytest.raises(EquidistanceFails):
        scenario_circle(square, SLANTED)


def test_circle_scenario_on_diamond_has_no_equidistant_member():
    diamond = pencil_new(Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, -1))
    with pytest.raises(EquidistanceFails):
        scenario_circle(diamond, VERTICAL_HALF)


def test_circle_scenario_needs_concyclic_points(generic):
    with pytest.raises(NotConcyclic):
        scenario_circle(generic, Line(1, 2, -20))


def test_diameter(square):
    report = scenario_diameter(square, PencilParam(2, 1), VERTICAL_HALF)
    assert report.verdict is Verdict.PASS
    assert report.details["diameter"] == Line(0, 1, 0)
    assert report.details["m"] == Point(1, 0, 2)
    assert report.details["n"] == Point(0, 1, 0)


def test_diameter_rejects_degenerate_member(square):
    with pytest.raises(NoProperCenter):
        scenario_diameter(square, PencilParam(1, 0), VERTICAL_HALF)


def test_diameter_fixed_point_mismatch(square):
    with pytest.raises(FixedPointMismatch):
        scenario_diameter(square, PencilParam(2, 1), SLANTED)


def test_axis_aligned_member(square):
    assert axis_aligned_member(square) == PencilParam(2, 1)


def test_axis(square):
    report = scenario_axis(square, PencilParam(2, 1), VERTICAL_HALF)
    assert report.scenario == "axis"
    assert report.verdict is Verdict.PASS
    assert report.details["axis"] == Line(0, 1, 0)
    assert report.checks["diameter_is_axis"]


def test_axis_needs_perpendicular_line(square):
    with pytest.raises(NotPerpendicular):
        scenario_axis(square, PencilParam(2, 1), SLANTED)


def test_line_with_infinite_fixed_point(square):
    assert line_with_infinite_fixed_point(square, (0, 1)) == Line(1, 0, 0)
    assert line_with_infinite_fixed_point(square, (1, 2)) == Line(2, -1, 0)
    with pytest.raises(NoSuchConfiguration):
        line_with_infinite_fixed_point(square, (1, 1))


def test_line_with_infinite_fixed_point_passes_prop1(square):
    line = line_with_infinite_fixed_point(square, (1, 2))
    report = verify_prop1(square, line)
    assert report.flags["midpoint_interpretation"]
    assert report.verdict is Verdict.PASS


def test_diagonal(square, x_axis):
    report = scenario_diagonal(square, x_axis)
    assert report.verdict is Verdict.PASS
    assert report.details["diagonal_point"] == Point(1, 0, 0)
    assert report.details["vertex_member"] == PencilParam(1, 0)
    assert report.details["other_fixed_point"] == Point(0, 0)
    assert report.flags["symmetric"]
    assert len(report.details["opposite_side_pairs"]) == 2


def test_diagonal_needs_diagonal_point(square):
    with pytest.raises(NotThroughDiagonalPoint):
        scenario_diagonal(square, SLANTED)
