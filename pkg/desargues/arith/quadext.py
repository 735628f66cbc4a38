"""Elements of a quadratic field extension Q(√d)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from desargues.errors import MixedRadicals, NotOrderable, NotSquareFree


def _make(a: Fraction, b: Fraction, d: int) -> "Fraction | QuadExt":
    """Return ``a + b√d`` collapsing to a plain ``Fraction`` when ``b == 0``."""
    if b == 0:
        return a
    return QuadExt(a, b, d)


@dataclass(frozen=True, slots=True, eq=False)
class QuadExt:
    """The value ``a + b·√d`` with rational ``a``, ``b`` and square-free ``d``.

    Instances are immutable. Arithmetic between elements of different
    extensions raises :class:`~desargues.errors.MixedRadicals`; results whose
    radical part cancels are returned as :class:`fractions.Fraction`.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self) -> None:
        from .scalar import is_squarefree  # scalar imports this module

        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not isinstance(self.d, int) or not is_squarefree(self.d):
            raise NotSquareFree(f"radicand {self.d!r} is not a square-free integer other than 0 and 1")

    # -- coercion -----------------------------------------------------------

    def _parts(self, other: object) -> tuple[Fraction, Fraction] | None:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise MixedRadicals(
                    f"cannot combine values in Q(√{self.d}) and Q(√{other.d})"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    # -- field operations ---------------------------------------------------

    def __add__(self, other: object) -> "Fraction | QuadExt":
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return _make(self.a + parts[0], self.b + parts[1], self.d)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Fraction | QuadExt":
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return _make(self.a - parts[0], self.b - parts[1], self.d)

    def __rsub__(self, other: object) -> "Fraction | QuadExt":
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return _make(parts[0] - self.a, parts[1] - self.b, self.d)

    def __mul__(self, other: object) -> "Fraction | QuadExt":
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        c, e = parts
        return _make(
            self.a * c + self.b * e * self.d, self.a * e + self.b * c, self.d
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Fraction | QuadExt":
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        c, e = parts
        n = c * c - e * e * self.d
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        # multiply by the conjugate of the divisor
        return _make(
            (self.a * c - self.b * e * self.d) / n, (self.b * c - self.a * e) / n, self.d
        )

    def __rtruediv__(self, other: object) -> "Fraction | QuadExt":
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return parts[0] * self.inverse()

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self) -> "QuadExt":
        return self

    def __pow__(self, exponent: int) -> "Fraction | QuadExt":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result: Fraction | QuadExt = Fraction(1)
        base: Fraction | QuadExt = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "Fraction | QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        return _make(self.a / n, -self.b / n, self.d)

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Return ``x·conj(x) = a² − d·b²``, always rational."""
        return self.a * self.a - self.b * self.b * self.d

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Return the sign of the real number ``a + b√d`` (``d > 0`` only)."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.d < 0:
            raise NotOrderable(f"{self} is not a real number")
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a² with b²d
        diff = self.a * self.a - self.b * self.b * self.d
        return sa if diff > 0 else sb

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __float__(self) -> float:
        if self.d < 0 and self.b != 0:
            raise NotOrderable(f"{self} has no real value")
        return float(self.a) + float(self.b) * float(self.d) ** 0.5

    def __str__(self) -> str:
        radical = f"sqrt({self.d})"
        if self.a == 0:
            return f"{self.b}*{radical}"
        op = "-" if self.b < 0 else "+"
        return f"{self.a} {op} {abs(self.b)}*{radical}"


Scalar = Union[Fraction, QuadExt]

__all__ = ["QuadExt", "Scalar"]
