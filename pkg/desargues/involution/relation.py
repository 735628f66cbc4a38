"""Involutions of a parametrized line as symmetric bilinear relations.

An involution is stored as the relation
``A·u₁v₁ + B(u₁v₂ + u₂v₁) + C·u₂v₂ = 0`` between a parameter ``u`` and its
image ``v``. The same triple read as a binary quadratic is the fixed-point
form, and a pair ``{u, v}`` is conjugate exactly when its form is apolar to
it. Nothing here ever needs the irrational fixed points themselves.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from desargues.arith.binary import BinaryQuadratic, HomParam, RootPair, quad_roots
from desargues.arith.linalg import nullspace, rank
from desargues.arith.quadext import Scalar
from desargues.arith.scalar import format_scalar, normalize_projective
from desargues.errors import (
    CoincidentFixedPoints,
    DegenerateRelation,
    Inconsistent,
    RankDeficient,
)

logger = logging.getLogger(__name__)


def apolar(q1: BinaryQuadratic, q2: BinaryQuadratic) -> Scalar:
    """Return ``a₁c₂ + c₁a₂ − 2b₁b₂``; zero iff the root pairs are harmonic."""
    return q1.apolar(q2)


@dataclass(frozen=True, init=False)
class InvolutionRel:
    A: Scalar
    B: Scalar
    C: Scalar

    def __init__(self, A: object, B: object, C: object) -> None:  # noqa: N803
        a, b, c = normalize_projective((A, B, C))
        if b * b - a * c == 0:
            raise DegenerateRelation(
                f"({format_scalar(a)}, {format_scalar(b)}, {format_scalar(c)}) "
                "is a projection onto one point, not an involution"
            )
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "B", b)
        object.__setattr__(self, "C", c)

    @classmethod
    def from_form(cls, form: BinaryQuadratic) -> "InvolutionRel":
        return cls(*form.coefficients)

    @property
    def coefficients(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.A, self.B, self.C)

    @property
    def fixed_form(self) -> BinaryQuadratic:
        return BinaryQuadratic(self.A, self.B, self.C)

    def relates(self, u: HomParam, v: HomParam) -> bool:
        return self.fixed_form.bilinear(u, v) == 0

    def __call__(self, p: HomParam) -> HomParam:
        return apply(self, p)

    def __str__(self) -> str:
        return "(" + ", ".join(format_scalar(c) for c in self.coefficients) + ")"


def _condition(q: BinaryQuadratic) -> tuple[Scalar, Scalar, Scalar]:
    # apolar(q, (A, B, C)) = c·A − 2b·B + a·C
    return (q.c, -2 * q.b, q.a)


def involution_from_pairs(
    q1: BinaryQuadratic,
    q2: BinaryQuadratic,
    q3: BinaryQuadratic | None = None,
) -> InvolutionRel:
    """Return the involution having each given pair as a conjugate pair.

    Two pairs determine it; a third pair must be consistent with the first
    two. Double-root pairs are accepted and force their point to be fixed.
    """
    rows = [_condition(q1), _condition(q2)]
    if q3 is not None:
        rows.append(_condition(q3))
    r = rank(rows)
    if r < 2:
        raise RankDeficient(f"pairs {q1}, {q2} do not determine a unique involution")
    if r == 3:
        raise Inconsistent(f"pair {q3} is not conjugate under the involution of {q1}, {q2}")
    (solution,) = nullspace(rows, 3)
    inv = InvolutionRel(*solution)
    logger.debug(
        "Involution %s from pairs %s",
        inv,
        ", ".join(str(q) for q in (q1, q2, q3) if q is not None),
    )
    return inv


def apply(inv: InvolutionRel, p: HomParam) -> HomParam:
    """Return the partner of ``p``; fixed points map to themselves."""
    return inv.fixed_form.partner(p)


def conjugate_pair(inv: InvolutionRel, p: HomParam) -> BinaryQuadratic:
    """Return the form of the pair ``{p, inv(p)}``."""
    return BinaryQuadratic.from_roots(p, apply(inv, p))


def fixed_points(inv: InvolutionRel) -> RootPair:
    return quad_roots(inv.fixed_form)


def involution_with_fixed_points(m: HomParam, n: HomParam) -> InvolutionRel:
    """Return the unique involution fixing ``m`` and ``n``."""
    if m == n:
        raise CoincidentFixedPoints(f"fixed points coincide at {m}")
    return InvolutionRel.from_form(BinaryQuadratic.from_roots(m, n))


__all__ = [
    "InvolutionRel",
    "apolar",
    "apply",
    "conjugate_pair",
    "fixed_points",
    "involution_from_pairs",
    "involution_with_fixed_points",
]
