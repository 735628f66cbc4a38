"""Verifiers for the butterfly statements on one pencil and one line.

Each sampled member's intersection with the line falls in one of three
cases: no real point, a single (tangency) point, or a distinct pair. In all
of them the member's pair is conjugate under the Desargues involution, so
the check is one exact apolarity evaluation against the fixed form.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from desargues.arith.binary import BinaryQuadratic, HomParam, RootPair, quad_roots
from desargues.arith.quadext import QuadExt
from desargues.arith.scalar import sign, squarefree_sqrt
from desargues.conics.intersection import is_asymptote, restrict_to_line
from desargues.errors import DesarguesError, MismatchAgainstDesargues, UnreducedRadical
from desargues.involution.relation import InvolutionRel, apolar, involution_from_pairs
from desargues.pencil.pencil import (
    Pencil,
    PencilParam,
    desargues_involution,
    member_restriction,
    member_through,
)
from desargues.projective.chart import LineChart
from desargues.projective.elements import Line

from .report import ButterflyReport, MemberCase, MemberCheck, TangentMember, Verdict
from .sampling import DEFAULT_SAMPLES, farey_params

logger = logging.getLogger(__name__)


def classify_member(q: BinaryQuadratic) -> MemberCase:
    if q.is_zero:
        return MemberCase.CONTAINED
    s = sign(q.discriminant)
    if s == 0:
        return MemberCase.SINGLE_POINT
    return MemberCase.DISTINCT_PAIR if s > 0 else MemberCase.NO_REAL_POINTS


def _pair_radicand(q: BinaryQuadratic) -> int | None:
    disc = q.discriminant
    if q.is_zero or disc == 0 or isinstance(disc, QuadExt):
        return None
    root = squarefree_sqrt(disc)
    return root.d if isinstance(root, QuadExt) else None


def check_member(
    param: PencilParam, q: BinaryQuadratic, fixed_form: BinaryQuadratic, *, affine_midpoints: bool
) -> MemberCheck:
    value = apolar(q, fixed_form)
    case = classify_member(q)
    midpoint = q.midpoint() if affine_midpoints and case is not MemberCase.CONTAINED else None
    return MemberCheck(
        param=param,
        restriction=q,
        apolarity=value,
        case=case,
        verdict=Verdict.of(value == 0),
        radicand=_pair_radicand(q),
        midpoint=midpoint,
    )


def tangent_member(p: Pencil, line: Line, chart: LineChart, root: HomParam) -> TangentMember:
    """Return the member through the fixed point ``root`` and whether it touches there."""
    point = chart.point(root)
    param, conic = member_through(p, point)
    q = restrict_to_line(conic, chart)
    touches = not q.is_zero and q.discriminant == 0 and q.evaluate(root) == 0
    degenerate = conic.is_degenerate
    asymptote = None
    if point.is_infinite and not degenerate and not line.is_at_infinity:
        asymptote = is_asymptote(conic, line)
    return TangentMember(
        fixed_point=root,
        point=point,
        param=param,
        conic=conic,
        touches=touches,
        degenerate=degenerate,
        is_asymptote=asymptote,
    )


def _fixed_points(inv: InvolutionRel, notes: list[str]) -> RootPair | None:
    try:
        return quad_roots(inv.fixed_form)
    except UnreducedRadical as exc:
        notes.append(f"fixed points not extracted: {exc}")
        logger.warning("Fixed points of %s left symbolic: %s", inv, exc)
        return None


def build_report(
    scenario: str,
    p: Pencil,
    line: Line,
    samples: Sequence[PencilParam] | None = None,
) -> ButterflyReport:
    """Run the member checks shared by every butterfly verifier."""
    inv, chart = desargues_involution(p, line)
    fixed_form = inv.fixed_form
    notes: list[str] = []
    roots = _fixed_points(inv, notes)
    infinite_fixed = not line.is_at_infinity and fixed_form.evaluate(HomParam.infinity()) == 0
    params = list(samples) if samples is not None else farey_params(DEFAULT_SAMPLES)

    report = ButterflyReport(
        scenario=scenario,
        line=line,
        chart=chart,
        involution=inv,
        fixed_points=roots,
    )
    for param in params:
        q = member_restriction(p, chart, param)
        report.members.append(
            check_member(param, q, fixed_form, affine_midpoints=infinite_fixed)
        )

    if roots is not None:
        for root in roots:
            try:
                report.tangent_members.append(tangent_member(p, line, chart, root))
            except DesarguesError as exc:
                notes.append(f"no tangent member located at {root}: {exc}")
                logger.warning("Tangent member at %s skipped: %s", root, exc)
        if roots.radicand is not None and roots.radicand < 0:
            notes.append(f"fixed points are imaginary, in Q(√{roots.radicand})")
        distinct = next(
            (
                m.restriction
                for m in report.members
                if m.case in (MemberCase.DISTINCT_PAIR, MemberCase.NO_REAL_POINTS)
            ),
            None,
        )
        if distinct is not None:
            report.checks["harmonic_conjugate_matches"] = (
                distinct.partner(roots.first) == roots.second
            )

    report.flags["midpoint_interpretation"] = infinite_fixed
    report.flags["asymptote_member_found"] = any(
        t.is_asymptote for t in report.tangent_members
    )
    if infinite_fixed and roots is not None:
        other = roots.second if roots.first.is_infinite else roots.first
        report.details["midpoint"] = chart.point(other)
    report.notes.extend(notes)
    logger.debug(
        "%s on %s: %d members, verdict %s",
        scenario,
        line,
        len(report.members),
        report.verdict.value,
    )
    return report


def verify_prop1(
    p: Pencil, line: Line, samples: Sequence[PencilParam] | None = None
) -> ButterflyReport:
    """Check that every sampled member meets ``line`` in a pair harmonic to the fixed points."""
    return build_report("prop1", p, line, samples)


def verify_prop2(
    p: Pencil,
    line: Line,
    qa: BinaryQuadratic,
    qb: BinaryQuadratic,
    samples: Sequence[PencilParam] | None = None,
) -> ButterflyReport:
    """Recover the fixed pair from two member pairs and compare with the pencil's involution.

    ``qa`` and ``qb`` are restrictions in the default chart of ``line``; either may
    have imaginary roots.
    """
    candidate = involution_from_pairs(qa, qb)
    inv, _ = desargues_involution(p, line)
    if candidate != inv:
        raise MismatchAgainstDesargues(
            f"pairs {qa}, {qb} give involution {candidate}, the pencil gives {inv} on {line}"
        )
    report = build_report("prop2", p, line, samples)
    report.details["pairs"] = [qa, qb]
    report.checks["pair_a_harmonic"] = apolar(qa, inv.fixed_form) == 0
    report.checks["pair_b_harmonic"] = apolar(qb, inv.fixed_form) == 0
    for label, q in (("pair_a", qa), ("pair_b", qb)):
        if classify_member(q) is MemberCase.NO_REAL_POINTS:
            report.notes.append(f"{label} {q} is an imaginary pair")
    return report


__all__ = [
    "build_report",
    "check_member",
    "classify_member",
    "tangent_member",
    "verify_prop1",
    "verify_prop2",
]
