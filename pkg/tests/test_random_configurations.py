"""Seeded sweeps of the butterfly statements over many generated pencils."""

from fractions import Fraction

import numpy as np
import pytest

from desargues.arith.binary import BinaryQuadratic, HomParam
from desargues.arith.scalar import sign
from desargues.butterfly import (
    Verdict,
    axis_aligned_member,
    butterfly_point,
    center_vector,
    circle_member,
    eleven_point_conic,
    farey_params,
    line_with_infinite_fixed_point,
    random_admissible_line,
    random_concyclic_pencil,
    random_params,
    random_pencil,
    scenario_axis,
    scenario_circle,
    scenario_diameter,
    verify_prop1,
    verify_prop2,
)
from desargues.conics.conic import center
from desargues.conics.intersection import restrict_to_line
from desargues.errors import DegenerateLocus, NoSuchConfiguration
from desargues.pencil.pencil import desargues_involution, member, member_restriction, member_through
from desargues.projective.elements import Point

ATTEMPTS = 2000


def _direction(rng):
    while True:
        dx, dy = (int(v) for v in rng.integers(-6, 7, size=2))
        if (dx, dy) != (0, 0):
            return dx, dy


def _butterfly_line(rng, p, direction=None):
    """A line whose infinite point is a fixed point, or ``None`` when the direction fails."""
    try:
        return line_with_infinite_fixed_point(p, direction or _direction(rng))
    except NoSuchConfiguration:
        return None


def _collect(count, build):
    found = []
    for _ in range(ATTEMPTS):
        item = build()
        if item is not None:
            found.append(item)
        if len(found) == count:
            return found
    pytest.fail(f"only {len(found)} of {count} configurations could be built")


def _disc(a, b, c):
    return b * b - a * c


def _imaginary_member_pair(q1: BinaryQuadratic, q2: BinaryQuadratic) -> BinaryQuadratic | None:
    """Return ``q1 + t·q2`` with the most negative discriminant, if it is negative."""
    d0, d2 = _disc(*q1.coefficients), _disc(*q2.coefficients)
    if d2 <= 0:
        return None
    cross = 2 * q1.b * q2.b - q1.a * q2.c - q2.a * q1.c
    t = Fraction(-cross) / (2 * d2)
    q = BinaryQuadratic(q1.a + t * q2.a, q1.b + t * q2.b, q1.c + t * q2.c)
    return q if sign(q.discriminant) < 0 else None


def test_prop1_members_touch_at_both_fixed_points():
    rng = np.random.default_rng(101)

    def build():
        p = random_pencil(rng)
        line = _butterfly_line(rng, p)
        return None if line is None else (p, line)

    for p, line in _collect(50, build):
        report = verify_prop1(p, line)
        assert report.verdict is Verdict.PASS, line
        assert report.fixed_points.is_rational
        assert len(report.tangent_members) == 2
        assert all(t.touches for t in report.tangent_members)
        assert report.flags["midpoint_interpretation"]
        assert report.checks["harmonic_conjugate_matches"]


def test_prop2_recovers_the_involution_from_an_imaginary_pair():
    rng = np.random.default_rng(202)

    def build():
        p = random_pencil(rng)
        line = random_admissible_line(rng, p)
        _, chart = desargues_involution(p, line)
        q1, q2 = (restrict_to_line(g, chart) for g in (p.g1, p.g2))
        qa = _imaginary_member_pair(q1, q2)
        return None if qa is None else (p, line, qa, q2)

    for p, line, qa, qb in _collect(50, build):
        report = verify_prop2(p, line, qa, qb)
        assert report.verdict is Verdict.PASS
        assert any("pair_a" in note and "imaginary" in note for note in report.notes)


def test_circle_variant_on_concyclic_pencils():
    rng = np.random.default_rng(303)

    def build():
        p = random_concyclic_pencil(rng)
        line = _butterfly_line(rng, p)
        if line is None:
            return None
        circle_param, _ = circle_member(p)
        _, chart = desargues_involution(p, line)
        for k in range(1, 12):
            param, _ = member_through(p, chart.point(HomParam(k)))
            q = member_restriction(p, chart, param)
            if param != circle_param and q.a != 0 and sign(q.discriminant) > 0:
                return p, line, param
        return None

    for p, line, chord_member in _collect(25, build):
        report = scenario_circle(p, line, [chord_member, *farey_params(8)])
        assert report.verdict is Verdict.PASS
        assert all(report.checks.values())
        fixed = report.involution.fixed_form
        assert fixed.evaluate(HomParam.infinity()) == 0
        assert fixed.evaluate(report.chart.param(report.details["foot"])) == 0


def _central_member(p, n):
    for param in farey_params(24):
        conic = member(p, param)
        if conic.is_degenerate or conic.evaluate(n) == 0:
            continue
        _, proper = center(conic)
        if proper:
            return param
    return None


def test_diameter_variant_never_mismatches():
    rng = np.random.default_rng(404)

    def build():
        p = random_pencil(rng)
        line = _butterfly_line(rng, p)
        if line is None:
            return None
        h_param = _central_member(p, line.infinite_point())
        return None if h_param is None else (p, h_param, line)

    for p, h_param, line in _collect(25, build):
        report = scenario_diameter(p, h_param, line)
        assert report.verdict is Verdict.PASS
        assert report.details["center"].lies_on(report.details["diameter"])


def test_axis_variant_never_mismatches():
    rng = np.random.default_rng(505)

    def build():
        p = random_pencil(rng)
        try:
            h_param = axis_aligned_member(p)
        except NoSuchConfiguration:
            return None
        line = _butterfly_line(rng, p, (0, 1)) or _butterfly_line(rng, p, (1, 0))
        return None if line is None else (p, h_param, line)

    for p, h_param, line in _collect(25, build):
        report = scenario_axis(p, h_param, line)
        assert report.verdict is Verdict.PASS
        assert report.checks["diameter_is_axis"]


def _locus(p):
    try:
        locus = eleven_point_conic(p)
    except DegenerateLocus:
        return None
    return None if locus.split else locus


def test_eleven_points_on_random_pencils():
    rng = np.random.default_rng(606)
    for locus in _collect(50, lambda: _locus(random_pencil(rng))):
        assert locus.verdict is Verdict.PASS
        assert len(locus.witnesses) == 11
        assert all(w.value == 0 for w in locus.witnesses)


def test_eleven_point_conic_of_concyclic_pencils_is_rectangular():
    rng = np.random.default_rng(707)
    for locus in _collect(10, lambda: _locus(random_concyclic_pencil(rng))):
        assert locus.verdict is Verdict.PASS
        assert locus.rectangular
        assert locus.circle_center_value == 0


def _off_locus_points(rng, p, conic, count=5):
    found = []
    while len(found) < count:
        x, y = (int(v) for v in rng.integers(-30, 31, size=2))
        point = Point(x, y)
        if point not in p.base_points and point not in found and conic.evaluate(point) != 0:
            found.append(point)
    return found


def test_butterfly_points_are_exactly_the_centers():
    rng = np.random.default_rng(808)

    def build():
        p = random_pencil(rng)
        locus = _locus(p)
        return None if locus is None else (p, locus.conic)

    for i, (p, conic) in enumerate(_collect(50, build)):
        centers = []
        for t in random_params(12, seed=i):
            vec = center_vector(p, t)
            if member(p, t).is_degenerate or vec[2] == 0:
                continue
            centers.append(Point(*vec))
        centers = centers[:5]
        assert len(centers) == 5
        for point in centers:
            result = butterfly_point(p, point)
            assert result.is_butterfly and result.n_at_infinity
            assert conic.evaluate(point) == 0
            assert center(result.member)[0] == point
        for point in _off_locus_points(rng, p, conic):
            result = butterfly_point(p, point)
            assert not result.is_butterfly
            assert result.n_at_infinity is False
