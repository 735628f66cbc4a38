"""Binary quadratic forms, homogeneous line parameters and their roots.

A form ``a·s² + 2b·st + c·t²`` encodes the unordered pair of parameters
``(s:t)`` at which it vanishes. The affine value of a parameter ``(s:t)`` is
``s/t``; ``(1:0)`` is the point at infinity of the parameter line.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator

from desargues.errors import DegenerateRange, UnreducedRadical, ZeroForm, ZeroVector

from .quadext import QuadExt, Scalar
from .scalar import (
    as_scalar,
    format_scalar,
    normalize_projective,
    sign,
    simplify,
    squarefree_sqrt,
)


class Infinity(str, Enum):
    """Symbolic value of the parameter ``(1:0)``; not a field element."""

    INF = "inf"

    def __str__(self) -> str:
        return self.value


INFINITY = Infinity.INF


@dataclass(frozen=True, init=False)
class HomParam:
    """Homogeneous parameter ``(s:t)`` on a projective line, up to scale."""

    s: Scalar
    t: Scalar

    def __init__(self, s: object, t: object = 1) -> None:
        try:
            ns, nt = normalize_projective((s, t))
        except ZeroVector as exc:
            raise ZeroVector("a line parameter cannot be (0:0)") from exc
        object.__setattr__(self, "s", ns)
        object.__setattr__(self, "t", nt)

    @classmethod
    def infinity(cls) -> "HomParam":
        return cls(1, 0)

    @classmethod
    def parse(cls, text: str) -> "HomParam":
        """Parse ``"inf"``, a scalar such as ``"-3/2"`` or ``"s:t"``."""
        text = text.strip()
        if text.lower() in {"inf", "∞", "infinity"}:
            return cls.infinity()
        if ":" in text:
            s, t = text.split(":", 1)
            return cls(as_scalar(s.strip()), as_scalar(t.strip()))
        return cls(as_scalar(text))

    @property
    def is_infinite(self) -> bool:
        return self.t == 0

    @property
    def value(self) -> Scalar | Infinity:
        if self.t == 0:
            return INFINITY
        return simplify(self.s / self.t)

    def bracket(self, other: "HomParam") -> Scalar:
        """Return ``s·t' − s'·t``, zero exactly when the parameters coincide."""
        return simplify(self.s * other.t - other.s * self.t)

    def __iter__(self) -> Iterator[Scalar]:
        yield self.s
        yield self.t

    def __str__(self) -> str:
        value = self.value
        return str(value) if isinstance(value, Infinity) else format_scalar(value)


@dataclass(frozen=True, init=False)
class BinaryQuadratic:
    """The form ``a·s² + 2b·st + c·t²`` up to a nonzero scale.

    The identically zero form is representable (a line lying inside a
    degenerate conic restricts to it) but has no roots.
    """

    a: Scalar
    b: Scalar
    c: Scalar

    def __init__(self, a: object, b: object, c: object) -> None:
        try:
            na, nb, nc = normalize_projective((a, b, c))
        except ZeroVector:
            na = nb = nc = Fraction(0)
        object.__setattr__(self, "a", na)
        object.__setattr__(self, "b", nb)
        object.__setattr__(self, "c", nc)

    @classmethod
    def from_roots(cls, p: HomParam, q: HomParam) -> "BinaryQuadratic":
        """Return the form ``(t_p·s − s_p·t)(t_q·s − s_q·t)`` vanishing at ``p`` and ``q``."""
        two_b = -(p.t * q.s + p.s * q.t)
        return cls(p.t * q.t, two_b / 2, p.s * q.s)

    @property
    def coefficients(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c)

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    @property
    def discriminant(self) -> Scalar:
        """Return ``b² − a·c``; zero exactly for a double root."""
        return simplify(self.b * self.b - self.a * self.c)

    def evaluate(self, p: HomParam) -> Scalar:
        return self.bilinear(p, p)

    def bilinear(self, u: HomParam, v: HomParam) -> Scalar:
        """Polarized form ``a·u₁v₁ + b(u₁v₂ + u₂v₁) + c·u₂v₂``."""
        return simplify(
            self.a * u.s * v.s
            + self.b * (u.s * v.t + u.t * v.s)
            + self.c * u.t * v.t
        )

    def partner(self, u: HomParam) -> HomParam:
        """Return the unique ``v`` with ``bilinear(u, v) == 0``."""
        first = self.b * u.s + self.c * u.t
        second = -(self.a * u.s + self.b * u.t)
        if first == 0 and second == 0:
            raise DegenerateRange(f"{u} is conjugate to every parameter of {self}")
        return HomParam(first, second)

    def apolar(self, other: "BinaryQuadratic") -> Scalar:
        """Return ``a₁c₂ + c₁a₂ − 2b₁b₂``; zero iff the root pairs are harmonic."""
        return simplify(
            self.a * other.c + self.c * other.a - 2 * self.b * other.b
        )

    def midpoint(self) -> Scalar | None:
        """Mean of the two affine root values, ``−b/a``; ``None`` if a root is at infinity."""
        if self.a == 0:
            return None
        return simplify(-self.b / self.a)

    def __str__(self) -> str:
        return "(" + ", ".join(format_scalar(x) for x in self.coefficients) + ")"


@dataclass(frozen=True)
class RootPair:
    """The two projective roots of a binary quadratic.

    ``radicand`` is the ``d`` of the extension the roots live in, ``None``
    when both roots are rational.
    """

    first: HomParam
    second: HomParam
    double: bool
    discriminant: Scalar
    radicand: int | None = None

    @property
    def roots(self) -> tuple[HomParam, HomParam]:
        return (self.first, self.second)

    @property
    def is_rational(self) -> bool:
        return self.radicand is None

    @property
    def is_imaginary(self) -> bool:
        return self.radicand is not None and self.radicand < 0

    def __iter__(self) -> Iterator[HomParam]:
        yield self.first
        yield self.second

    def __contains__(self, item: object) -> bool:
        return item == self.first or item == self.second


def quad_roots(q: BinaryQuadratic) -> RootPair:
    """Return the roots of ``q`` over Q or a quadratic extension Q(√d)."""
    if q.is_zero:
        raise ZeroForm("the zero form has no roots")
    a, b, c = q.coefficients
    disc = q.discriminant
    if a == 0:
        if b == 0:
            inf = HomParam.infinity()
            return RootPair(inf, inf, True, disc)
        return RootPair(HomParam.infinity(), HomParam(-c, 2 * b), False, disc)
    if disc == 0:
        root = HomParam(-b, a)
        return RootPair(root, root, True, disc)
    if isinstance(disc, QuadExt):
        raise UnreducedRadical(f"roots of {q} need a nested radical")
    r = squarefree_sqrt(disc)
    radicand = r.d if isinstance(r, QuadExt) else None
    first = HomParam(-b + r, a)
    second = HomParam(-b - r, a)
    return RootPair(first, second, False, disc, radicand)


def discriminant_sign(q: BinaryQuadratic) -> int:
    """Sign of the discriminant: 1 for two real roots, 0 double, -1 imaginary."""
    return sign(q.discriminant)


__all__ = [
    "INFINITY",
    "BinaryQuadratic",
    "HomParam",
    "Infinity",
    "RootPair",
    "discriminant_sign",
    "quad_roots",
]
