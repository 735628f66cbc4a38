"""Helpers shared by every exact computation: coercion, radicals and
projective normalization of coordinate vectors."""

from __future__ import annotations

import functools
import logging
import math
import os
from collections.abc import Iterable, Sequence
from fractions import Fraction

from desargues.errors import MixedRadicals, UnreducedRadical, ZeroVector

from .quadext import QuadExt, Scalar

logger = logging.getLogger(__name__)

# Trial division limit used by :func:`squarefree_sqrt` when
# ``DESARGUES_TRIAL_BOUND`` is unset.
DEFAULT_TRIAL_BOUND = 10**6


def trial_bound() -> int:
    """Return the configured trial-division bound for radical reduction."""
    raw = os.getenv("DESARGUES_TRIAL_BOUND")
    if not raw:
        return DEFAULT_TRIAL_BOUND
    try:
        bound = int(raw)
    except ValueError:
        logger.warning(
            "DESARGUES_TRIAL_BOUND=%r is not an integer; using %s",
            raw,
            DEFAULT_TRIAL_BOUND,
        )
        return DEFAULT_TRIAL_BOUND
    return max(bound, 2)


def as_scalar(value: object) -> Scalar:
    """Coerce ints, strings such as ``"3/5"`` and existing scalars."""
    if isinstance(value, QuadExt):
        return simplify(value)
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact scalar")


def simplify(value: Scalar) -> Scalar:
    if isinstance(value, QuadExt) and value.b == 0:
        return value.a
    return value


def is_rational(value: Scalar) -> bool:
    return not isinstance(value, QuadExt) or value.b == 0


def conj(value: Scalar) -> Scalar:
    if isinstance(value, QuadExt):
        return value.conjugate()
    return value


def norm(value: Scalar) -> Fraction:
    if isinstance(value, QuadExt):
        return value.norm()
    return value * value


def sign(value: Scalar) -> int:
    if isinstance(value, QuadExt):
        return value.sign()
    return (value > 0) - (value < 0)


def radical_of(values: Iterable[Scalar]) -> int | None:
    """Return the common radicand of ``values`` or ``None`` if all are rational."""
    found: int | None = None
    for value in values:
        if isinstance(value, QuadExt) and value.b != 0:
            if found is None:
                found = value.d
            elif found != value.d:
                raise MixedRadicals(
                    f"values mix Q(√{found}) and Q(√{value.d}) in one expression"
                )
    return found


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Return the rational square root of ``value`` if it exists."""
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def _squarefree_split(n: int, bound: int) -> tuple[int, int]:
    """Return ``(s, m)`` with ``n == s*s*m`` and ``m`` square-free."""
    square, free = 1, 1
    k = 2
    exhausted = False
    while k * k <= n:
        if k > bound:
            exhausted = True
            break
        if n % k == 0:
            exponent = 0
            while n % k == 0:
                n //= k
                exponent += 1
            square *= k ** (exponent // 2)
            if exponent % 2:
                free *= k
        k += 1 if k == 2 else 2
    if n > 1:
        root = math.isqrt(n)
        if root * root == n:
            square *= root
        elif not exhausted or n < bound**3:
            # every prime factor left exceeds the bound, so p²q would be > bound³
            free *= n
        else:
            raise UnreducedRadical(
                f"cofactor {n} has no factor below {bound}; cannot prove it square-free"
            )
    return square, free


def squarefree_sqrt(value: object, *, bound: int | None = None) -> Scalar:
    """Return an exact square root of a rational number.

    The result is rational when ``value`` is a perfect square and otherwise
    ``0 + s·√d`` with square-free ``d`` (negative for negative input).
    """
    r = as_scalar(value)
    if isinstance(r, QuadExt):
        raise UnreducedRadical(f"{r} is irrational; nested radicals are not supported")
    if r == 0:
        return Fraction(0)
    exact = rational_sqrt(abs(r))
    if exact is not None and r > 0:
        return exact
    limit = trial_bound() if bound is None else bound
    p, q = abs(r.numerator), r.denominator
    # sqrt(p/q) = sqrt(p·q)/q
    square, free = _squarefree_split(p * q, limit)
    coefficient = Fraction(square, q)
    radicand = -free if r < 0 else free
    if radicand == 1:
        return coefficient
    return QuadExt(Fraction(0), coefficient, radicand)


@functools.lru_cache(maxsize=1024)
def is_squarefree(d: int) -> bool:
    if d in (0, 1):
        return False
    square, _ = _squarefree_split(abs(d), trial_bound())
    return square == 1


def normalize_projective(values: Sequence[object]) -> tuple[Scalar, ...]:
    """Return the canonical representative of a homogeneous vector.

    Rational vectors become primitive integer vectors whose first nonzero
    entry is positive. Vectors over Q(√d) are divided by their first nonzero
    entry and then cleared to a primitive integral representative.
    """
    vec = [as_scalar(v) for v in values]
    if all(v == 0 for v in vec):
        raise ZeroVector("homogeneous coordinates cannot all be zero")
    d = radical_of(vec)
    if d is not None:
        pivot = next(v for v in vec if v != 0)
        vec = [simplify(v / pivot) for v in vec]
        d = radical_of(vec)
    if d is None:
        rats = [v.a if isinstance(v, QuadExt) else v for v in vec]
        scale = math.lcm(*(r.denominator for r in rats))
        ints = [r.numerator * (scale // r.denominator) for r in rats]
        g = math.gcd(*ints)
        first = next(i for i in ints if i != 0)
        if first < 0:
            g = -g
        return tuple(Fraction(i // g) for i in ints)
    parts = [(v.a, v.b) if isinstance(v, QuadExt) else (v, Fraction(0)) for v in vec]
    flat = [x for pair in parts for x in pair]
    scale = math.lcm(*(x.denominator for x in flat))
    g = math.gcd(*(x.numerator * (scale // x.denominator) for x in flat))
    factor = Fraction(scale, g)
    return tuple(simplify(QuadExt(a * factor, b * factor, d)) for a, b in parts)


def format_scalar(value: Scalar) -> str:
    """Human readable exact text: ``3/5``, ``-2``, ``1/2 + 3*sqrt(5)``."""
    return str(simplify(value))


__all__ = [
    "DEFAULT_TRIAL_BOUND",
    "Scalar",
    "as_scalar",
    "conj",
    "format_scalar",
    "is_rational",
    "is_squarefree",
    "norm",
    "normalize_projective",
    "radical_of",
    "rational_sqrt",
    "sign",
    "simplify",
    "squarefree_sqrt",
    "trial_bound",
]
