import pytest

from desargues.butterfly import (
    Verdict,
    butterfly_point,
    center_vector,
    eleven_point_conic,
)
from desargues.butterfly import centers
from desargues.conics.conic import center
from desargues.errors import AxisUndefined, BasePoint, DegenerateLocus
from desargues.pencil.pencil import PencilParam, member, pencil_new
from desargues.projective.elements import LINE_AT_INFINITY, Line, Point

LABELS = [
    "diagonal_g1",
    "diagonal_g2",
    "diagonal_g3",
    "midpoint_ab",
    "midpoint_ac",
    "midpoint_ad",
    "midpoint_bc",
    "midpoint_bd",
    "midpoint_cd",
    "infinite_1",
    "infinite_2",
]


@pytest.fixture
def concyclic():
    """Four points on x² + y² = 25 with no parallel opposite sides."""
    return pencil_new(Point(5, 0), Point(3, 4), Point(-5, 0), Point(4, -3))


def test_center_vector_matches_member_center(generic):
    for t in (PencilParam(1, 1), PencilParam(2, -3), PencilParam(5, 1)):
        conic = member(generic, t)
        if conic.is_degenerate:
            continue
        point, _ = center(conic)
        assert Point(*center_vector(generic, t)) == point


def test_eleven_points_on_generic_pencil(generic):
    locus = eleven_point_conic(generic)
    assert locus.verdict is Verdict.PASS
    assert not locus.split
    assert [w.label for w in locus.witnesses] == LABELS
    assert all(w.ok for w in locus.witnesses)
    assert locus.infinite_form_check == 0
    assert all(locus.conic.contains(pt) for pt in locus.samples)
    assert locus.circle_center is None


def test_concyclic_locus_is_rectangular_through_circle_center(concyclic):
    locus = eleven_point_conic(concyclic)
    assert locus.verdict is Verdict.PASS
    assert locus.rectangular
    assert locus.circle_center == Point(0, 0)
    assert locus.circle_center_value == 0


def test_trapezoid_locus_splits(trapezoid):
    locus = eleven_point_conic(trapezoid)
    assert locus.split
    assert locus.verdict is Verdict.PASS
    assert len(locus.witnesses) == 11
    assert all(w.value == 0 for w in locus.witnesses)
    assert any("splits" in note for note in locus.notes)
    # the diagonal point of the parallel sides AC and BD is at infinity
    assert locus.witnesses[2].point == Point(0, 1, 0)


def test_square_has_a_single_center(square):
    with pytest.raises(DegenerateLocus):
        eleven_point_conic(square)


def test_too_few_sampled_centers_is_a_degenerate_locus(generic, monkeypatch):
    real = centers._sample_centers
    monkeypatch.setattr(centers, "_sample_centers", lambda p: real(p)[:3])
    with pytest.raises(DegenerateLocus, match="only 3 distinct centers"):
        eleven_point_conic(generic)


def test_eleven_point_to_dict(generic):
    data = eleven_point_conic(generic).to_dict()
    assert data["verdict"] == "pass"
    assert len(data["witnesses"]) == 11
    assert {w["label"] for w in data["witnesses"]} == set(LABELS)


def test_butterfly_point_off_center_line(square):
    result = butterfly_point(square, Point(1, 0, 2))
    assert result.is_butterfly
    assert result.member_param == PencilParam(1, 0)
    assert result.infinite_point == Point(0, 1, 0)
    assert result.axis == Line(2, 0, -1)
    assert result.n_at_infinity


def test_common_center_is_butterfly_for_every_member(square):
    result = butterfly_point(square, Point(0, 0))
    assert result.is_butterfly
    assert result.every_member
    assert result.coincident_polar == LINE_AT_INFINITY
    assert result.n_at_infinity is None
    assert not result.axis_defined
    with pytest.raises(AxisUndefined):
        butterfly_point(square, Point(0, 0), require_axis=True)


def test_ordinary_point_is_not_a_butterfly_point(square):
    result = butterfly_point(square, Point(2, 3))
    assert not result.is_butterfly
    assert result.n_at_infinity is False
    assert result.axis is None
    assert result.member_param is None


def test_butterfly_point_rejects_base_points(square):
    with pytest.raises(BasePoint):
        butterfly_point(square, Point(1, 1))


def test_center_of_generic_member_is_butterfly_point(generic):
    t = PencilParam(2, 1)
    conic = member(generic, t)
    point, proper = center(conic)
    assert proper
    result = butterfly_point(generic, point)
    assert result.is_butterfly
    assert result.member_param == t
    assert result.axis is not None
    assert result.axis.contains(point)
