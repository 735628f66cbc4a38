"""Small exact linear algebra on tuples of scalars.

Everything here works over Q or a single Q(√d). Matrices are tuples of
rows; there is no numpy on this path because the entries are exact.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from desargues.errors import ZeroVector

from .quadext import Scalar
from .scalar import as_scalar, normalize_projective, simplify

Vector = tuple[Scalar, ...]
Matrix = tuple[Vector, ...]

ZERO = Fraction(0)


def vector(values: Sequence[object]) -> Vector:
    return tuple(as_scalar(v) for v in values)


def matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return tuple(vector(row) for row in rows)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    total: Scalar = ZERO
    for a, b in zip(u, v, strict=True):
        total = total + a * b
    return simplify(total)


def cross(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    """Cross product of two 3-vectors: the join of two points or meet of two lines."""
    return (
        simplify(u[1] * v[2] - u[2] * v[1]),
        simplify(u[2] * v[0] - u[0] * v[2]),
        simplify(u[0] * v[1] - u[1] * v[0]),
    )


def add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(simplify(a + b) for a, b in zip(u, v, strict=True))


def scale(k: Scalar, u: Sequence[Scalar]) -> Vector:
    return tuple(simplify(k * a) for a in u)


def combine(k1: Scalar, u: Sequence[Scalar], k2: Scalar, v: Sequence[Scalar]) -> Vector:
    """Return ``k1·u + k2·v``."""
    return tuple(simplify(k1 * a + k2 * b) for a, b in zip(u, v, strict=True))


def is_zero(u: Sequence[Scalar]) -> bool:
    return all(a == 0 for a in u)


def proportional(u: Sequence[Scalar], v: Sequence[Scalar]) -> bool:
    """True when ``u`` and ``v`` are nonzero multiples of each other."""
    if is_zero(u) or is_zero(v):
        return False
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))


def mat_vec(m: Matrix, v: Sequence[Scalar]) -> Vector:
    return tuple(dot(row, v) for row in m)


def mat_add(m: Matrix, n: Matrix) -> Matrix:
    return tuple(add(r, s) for r, s in zip(m, n, strict=True))


def mat_combine(k1: Scalar, m: Matrix, k2: Scalar, n: Matrix) -> Matrix:
    return tuple(combine(k1, r, k2, s) for r, s in zip(m, n, strict=True))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def symmetric_outer(u: Sequence[Scalar], v: Sequence[Scalar]) -> Matrix:
    """Return ``u·vᵀ + v·uᵀ``."""
    n = len(u)
    return tuple(
        tuple(simplify(u[i] * v[j] + v[i] * u[j]) for j in range(n)) for i in range(n)
    )


def bilinear(m: Matrix, p: Sequence[Scalar], q: Sequence[Scalar]) -> Scalar:
    return dot(p, mat_vec(m, q))


def quadratic(m: Matrix, p: Sequence[Scalar]) -> Scalar:
    return bilinear(m, p, p)


def det2(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Scalar:
    return simplify(a * d - b * c)


def det3(m: Matrix) -> Scalar:
    return dot(m[0], cross(m[1], m[2]))


def adjugate3(m: Matrix) -> Matrix:
    """Classical adjoint: ``m · adj(m) = det(m) · I``."""
    # column i of adj(m) is the cross product of the other two rows
    c0 = cross(m[1], m[2])
    c1 = cross(m[2], m[0])
    c2 = cross(m[0], m[1])
    return transpose((c0, c1, c2))


def _normalize_row(row: list[Scalar]) -> list[Scalar]:
    try:
        return list(normalize_projective(row))
    except ZeroVector:
        return [ZERO] * len(row)


def row_echelon(rows: Sequence[Sequence[object]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduce ``rows`` to reduced row-echelon shape without divisions.

    Pivots are taken left to right from the first row with a nonzero entry
    in the column, so the output is deterministic. Each row is kept as its
    canonical projective representative; zero rows are dropped.
    Returns ``(rows, pivot_columns)``.
    """
    work = [_normalize_row([as_scalar(v) for v in row]) for row in rows]
    work = [row for row in work if not is_zero(row)]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        p = work[r][col]
        for i in range(len(work)):
            if i == r or work[i][col] == 0:
                continue
            f = work[i][col]
            # cross-multiply to clear the column: p·row_i − f·row_r
            work[i] = _normalize_row(
                [simplify(p * a - f * b) for a, b in zip(work[i], work[r])]
            )
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return [row for row in work[:r]], pivots


def rank(rows: Sequence[Sequence[object]]) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence[object]], ncols: int | None = None) -> list[Vector]:
    """Return a basis of ``{x : rows · x = 0}``, each vector canonically scaled."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty system")
        ncols = len(rows[0])
    reduced, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Vector] = []
    for f in free:
        x: list[Scalar] = [ZERO] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            x[pc] = simplify(-row[f] / row[pc])
        basis.append(tuple(normalize_projective(x)))
    return basis


__all__ = [
    "Matrix",
    "Vector",
    "add",
    "adjugate3",
    "bilinear",
    "combine",
    "cross",
    "det2",
    "det3",
    "dot",
    "is_zero",
    "mat_add",
    "mat_combine",
    "mat_vec",
    "matrix",
    "nullspace",
    "proportional",
    "quadratic",
    "rank",
    "row_echelon",
    "scale",
    "symmetric_outer",
    "transpose",
    "vector",
]
