"""The locus of centers of a pencil and the butterfly points on it.

The center of ``λ·G1 + μ·G2`` is ``adj(λ·G1 + μ·G2)·(0, 0, 1)``, quadratic in
``(λ:μ)`` through

    adj(λA + μB) = λ²·adj(A) + λμ·[adj(A+B) − adj(A) − adj(B)] + μ²·adj(B)

so the centers sweep a conic: the eleven-point conic.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from desargues.arith.binary import quad_roots
from desargues.arith.linalg import (
    Vector,
    add,
    adjugate3,
    combine,
    cross,
    is_zero,
    mat_add,
    mat_vec,
    rank,
    scale,
    vector,
)
from desargues.arith.quadext import Scalar
from desargues.arith.scalar import conj, simplify
from desargues.conics.conic import center, classify_affine
from desargues.conics.fitting import conic_through_five, conic_through_points
from desargues.conics.intersection import restrict_to_line
from desargues.errors import (
    AxisUndefined,
    BasePoint,
    DegenerateLocus,
    LineThroughBasePoint,
    NoUniqueConic,
    NotConcyclic,
    PointAtInfinity,
    UnreducedRadical,
)
from desargues.pencil.pencil import (
    Pencil,
    PencilParam,
    desargues_involution,
    diagonal_points,
    member,
)
from desargues.projective.elements import LINE_AT_INFINITY, Line, Point, join, midpoint

from .constructions import circle_member
from .report import ButterflyPointResult, EllipseOfCenters, Witness
from .sampling import farey_params

logger = logging.getLogger(__name__)

E3 = vector((0, 0, 1))
FIT_POINTS = 5
CHECK_POINTS = 3
SAMPLE_LIMIT = 32
SIDE_LABELS = ("ab", "ac", "ad", "bc", "bd", "cd")


def pole_coefficients(p: Pencil) -> tuple[Vector, Vector, Vector]:
    """Return ``(P1, P12, P2)`` with center ``λ²·P1 + λμ·P12 + μ²·P2``."""
    g1, g2 = p.g1.matrix, p.g2.matrix
    p1 = mat_vec(adjugate3(g1), E3)
    p2 = mat_vec(adjugate3(g2), E3)
    both = mat_vec(adjugate3(mat_add(g1, g2)), E3)
    p12 = add(both, scale(Fraction(-1), add(p1, p2)))
    return p1, p12, p2


def center_vector(p: Pencil, t: PencilParam) -> Vector:
    p1, p12, p2 = pole_coefficients(p)
    lam, mu = t.lam, t.mu
    return add(combine(lam * lam, p1, lam * mu, p12), scale(mu * mu, p2))


def _sample_centers(p: Pencil) -> list[Point]:
    points: list[Point] = []
    for t in farey_params(SAMPLE_LIMIT):
        vec = center_vector(p, t)
        if is_zero(vec):
            continue
        point = Point(*vec)
        if point not in points:
            points.append(point)
        if len(points) == FIT_POINTS + CHECK_POINTS:
            break
    return points


def _finite_witnesses(p: Pencil, notes: list[str]) -> list[tuple[str, Point]]:
    named: list[tuple[str, Point]] = [
        (f"diagonal_g{i}", x) for i, x in enumerate(diagonal_points(p), start=1)
    ]
    for label, (u, v) in zip(SIDE_LABELS, p.sides):
        try:
            named.append((f"midpoint_{label}", midpoint(u, v)))
        except PointAtInfinity as exc:
            notes.append(f"midpoint_{label} skipped: {exc}")
    return named


def _proportionality(u: tuple[Scalar, ...], v: tuple[Scalar, ...]) -> Scalar:
    residue = cross(u, v)
    return next((r for r in residue if r != 0), simplify(residue[0]))


def eleven_point_conic(p: Pencil) -> EllipseOfCenters:
    """Fit the locus of centers and check the eleven points classically on it."""
    coefficients = pole_coefficients(p)
    locus_rank = rank(coefficients)
    if locus_rank <= 1:
        raise DegenerateLocus("every member of the pencil has the same center")

    notes: list[str] = []
    samples = _sample_centers(p)
    named = _finite_witnesses(p, notes)
    split = locus_rank == 2
    needed = 2 if split else FIT_POINTS
    if len(samples) < needed:
        raise DegenerateLocus(
            f"only {len(samples)} distinct centers among the sampled members, need {needed}"
        )
    if split:
        # centers run along one line; only the witnesses pin down the conic
        notes.append(f"centers run along {join(samples[0], samples[1])}; the locus splits")
        try:
            conic = conic_through_points(list(dict.fromkeys(pt for _, pt in named)))
        except (NoUniqueConic, ValueError) as exc:
            raise DegenerateLocus(f"the witnesses do not fix a conic: {exc}") from exc
    else:
        try:
            conic = conic_through_five(samples[:FIT_POINTS])
        except NoUniqueConic as exc:
            raise DegenerateLocus(str(exc)) from exc
    off = [pt for pt in samples if not conic.contains(pt)]
    if off:
        raise DegenerateLocus(f"sampled centers {', '.join(map(str, off))} miss {conic}")

    witnesses = [Witness(label, pt, conic.evaluate(pt)) for label, pt in named]
    infinite_check: Scalar | None = None
    try:
        inv, chart = desargues_involution(p, LINE_AT_INFINITY)
    except LineThroughBasePoint as exc:
        notes.append(f"infinite witnesses skipped: {exc}")
    else:
        restriction = restrict_to_line(conic, chart)
        infinite_check = _proportionality(
            restriction.coefficients, inv.fixed_form.coefficients
        )
        try:
            roots = quad_roots(inv.fixed_form)
        except UnreducedRadical as exc:
            notes.append(f"infinite witnesses checked through the restriction only: {exc}")
        else:
            first = chart.point(roots.first)
            value = conic.evaluate(first)
            witnesses.append(Witness("infinite_1", first, value))
            second = chart.point(roots.second)
            if roots.is_rational:
                witnesses.append(Witness("infinite_2", second, conic.evaluate(second)))
            else:
                witnesses.append(
                    Witness("infinite_2", second, conj(value), conjugate_of="infinite_1")
                )

    m11, _, m22 = conic.affine_part
    result = EllipseOfCenters(
        conic=conic,
        witnesses=witnesses,
        infinite_form_check=infinite_check,
        rectangular=simplify(m11 + m22) == 0,
        kind=str(classify_affine(conic)),
        split=split,
        samples=samples,
        notes=notes,
    )
    try:
        _, circle = circle_member(p)
    except NotConcyclic:
        pass
    else:
        o, _ = center(circle)
        result.circle_center = o
        result.circle_center_value = conic.evaluate(o)
    logger.debug("Locus of centers %s (%s), verdict %s", conic, result.kind, result.verdict.value)
    return result


def butterfly_point(p: Pencil, m: Point, *, require_axis: bool = False) -> ButterflyPointResult:
    """Decide whether ``m`` is the center of some member.

    The polars of ``m`` with respect to the members form a pencil of lines
    through a point ``N``; for a butterfly point ``N`` lies at infinity and
    ``join(M, N)`` is the axis.
    """
    g1m = mat_vec(p.g1.matrix, m.coords)
    g2m = mat_vec(p.g2.matrix, m.coords)
    if p.g1.evaluate(m) == 0 and p.g2.evaluate(m) == 0:
        raise BasePoint(f"{m} is a base point of the pencil")

    # the polar λ·G1·M + μ·G2·M is the line at infinity (or vanishes) when
    # its first two coordinates vanish
    rows = [(g1m[0], g2m[0]), (g1m[1], g2m[1])]
    det = simplify(rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0])
    result = ButterflyPointResult(point=m, is_butterfly=det == 0)
    if result.is_butterfly:
        nonzero = next((r for r in rows if r[0] != 0 or r[1] != 0), None)
        if nonzero is None:
            result.every_member = True
        else:
            param = PencilParam(nonzero[1], simplify(-nonzero[0]))
            result.member_param = param
            result.member = member(p, param)

    meet_vec = cross(g1m, g2m)
    if is_zero(meet_vec):
        polar_vec = g1m if not is_zero(g1m) else g2m
        result.coincident_polar = Line(*polar_vec)
        if require_axis:
            raise AxisUndefined(
                f"every polar of {m} is {result.coincident_polar}; no axis is defined"
            )
        return result
    n = Point(*meet_vec)
    # the line at infinity is one of the polars exactly when N is infinite
    result.n_at_infinity = n.is_infinite
    if result.n_at_infinity != result.is_butterfly:
        raise AssertionError(f"polars of {m} meet at {n}, inconsistent with det = {det}")
    if result.is_butterfly:
        result.infinite_point = n
        result.axis = join(m, n)
    return result


__all__ = [
    "butterfly_point",
    "center_vector",
    "eleven_point_conic",
    "pole_coefficients",
]
