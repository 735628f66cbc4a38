"""Involutions on a line, fixed points and harmonicity by apolarity."""

from desargues.arith.binary import BinaryQuadratic, HomParam, RootPair, quad_roots

from .relation import (
    InvolutionRel,
    apolar,
    apply,
    conjugate_pair,
    fixed_points,
    involution_from_pairs,
    involution_with_fixed_points,
)

__all__ = [
    "BinaryQuadratic",
    "HomParam",
    "InvolutionRel",
    "RootPair",
    "apolar",
    "apply",
    "conjugate_pair",
    "fixed_points",
    "involution_from_pairs",
    "involution_with_fixed_points",
    "quad_roots",
]
