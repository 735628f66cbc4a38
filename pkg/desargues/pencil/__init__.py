"""Pencils of conics through four base points and their Desargues involution."""

from .pencil import (
    Pencil,
    PencilParam,
    check_admissible,
    degenerate_members,
    desargues_involution,
    diagonal_points,
    member,
    member_restriction,
    member_through,
    pencil_new,
    side_midpoints,
)

__all__ = [
    "Pencil",
    "PencilParam",
    "check_admissible",
    "degenerate_members",
    "desargues_involution",
    "diagonal_points",
    "member",
    "member_restriction",
    "member_through",
    "pencil_new",
    "side_midpoints",
]
