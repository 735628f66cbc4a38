"""Exact scalars: rationals, one quadratic extension, binary quadratics."""

from .binary import (
    INFINITY,
    BinaryQuadratic,
    HomParam,
    Infinity,
    RootPair,
    discriminant_sign,
    quad_roots,
)
from .quadext import QuadExt, Scalar
from .scalar import (
    as_scalar,
    conj,
    format_scalar,
    is_rational,
    norm,
    normalize_projective,
    radical_of,
    sign,
    simplify,
    squarefree_sqrt,
)

__all__ = [
    "INFINITY",
    "BinaryQuadratic",
    "HomParam",
    "Infinity",
    "QuadExt",
    "RootPair",
    "Scalar",
    "as_scalar",
    "conj",
    "discriminant_sign",
    "format_scalar",
    "is_rational",
    "norm",
    "normalize_projective",
    "quad_roots",
    "radical_of",
    "sign",
    "simplify",
    "squarefree_sqrt",
]
