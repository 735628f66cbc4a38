"""Butterfly statements as exact verifiers over a pencil and a line."""

from .centers import butterfly_point, center_vector, eleven_point_conic, pole_coefficients
from .constructions import axis_aligned_member, circle_member, line_with_infinite_fixed_point
from .propositions import build_report, classify_member, verify_prop1, verify_prop2
from .report import (
    ButterflyPointResult,
    ButterflyReport,
    EllipseOfCenters,
    MemberCase,
    MemberCheck,
    TangentMember,
    Verdict,
    Witness,
)
from .sampling import DEFAULT_SAMPLES, farey_params, random_params, sample_params
from .scenarios import (
    scenario_axis,
    scenario_circle,
    scenario_diagonal,
    scenario_diameter,
    scenario_klamkin,
)
from .sweep import (
    SweepResult,
    random_admissible_line,
    random_concyclic_pencil,
    random_pencil,
    run_sweep,
)

__all__ = [
    "DEFAULT_SAMPLES",
    "ButterflyPointResult",
    "ButterflyReport",
    "EllipseOfCenters",
    "MemberCase",
    "MemberCheck",
    "SweepResult",
    "TangentMember",
    "Verdict",
    "Witness",
    "axis_aligned_member",
    "build_report",
    "butterfly_point",
    "center_vector",
    "circle_member",
    "classify_member",
    "eleven_point_conic",
    "farey_params",
    "line_with_infinite_fixed_point",
    "pole_coefficients",
    "random_admissible_line",
    "random_concyclic_pencil",
    "random_params",
    "random_pencil",
    "run_sweep",
    "sample_params",
    "scenario_axis",
    "scenario_circle",
    "scenario_diagonal",
    "scenario_diameter",
    "scenario_klamkin",
    "verify_prop1",
    "verify_prop2",
]
