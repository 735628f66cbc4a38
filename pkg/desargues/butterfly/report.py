"""Result records produced by the butterfly verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from desargues.arith.binary import BinaryQuadratic, HomParam, RootPair
from desargues.arith.quadext import Scalar
from desargues.conics.conic import Conic
from desargues.involution.relation import InvolutionRel
from desargues.pencil.pencil import PencilParam
from desargues.projective.chart import LineChart
from desargues.projective.elements import Line, Point
from desargues.scene.codec import dataclass_to_dict


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"

    @classmethod
    def of(cls, ok: bool) -> "Verdict":
        return cls.PASS if ok else cls.FAIL


class MemberCase(str, Enum):
    """How a member meets the line: the three cases of the butterfly statements."""

    NO_REAL_POINTS = "no_real_points"
    SINGLE_POINT = "single_point"
    DISTINCT_PAIR = "distinct_pair"
    CONTAINED = "component_contained"


@dataclass
class MemberCheck:
    param: PencilParam
    restriction: BinaryQuadratic
    apolarity: Scalar
    case: MemberCase
    verdict: Verdict
    radicand: int | None = None
    midpoint: Scalar | None = None


@dataclass
class TangentMember:
    """The member through a fixed point and whether it touches the line there."""

    fixed_point: HomParam
    point: Point
    param: PencilParam
    conic: Conic
    touches: bool
    degenerate: bool = False
    is_asymptote: bool | None = None

    @property
    def verdict(self) -> Verdict:
        return Verdict.of(self.touches)


@dataclass
class ButterflyReport:
    """Everything a verifier found about one pencil and one line.

    ``checks`` holds the scenario's own exact assertions (name → passed);
    ``details`` holds the scenario's named points and lines.
    """

    scenario: str
    line: Line
    chart: LineChart
    involution: InvolutionRel
    fixed_points: RootPair | None
    members: list[MemberCheck] = field(default_factory=list)
    tangent_members: list[TangentMember] = field(default_factory=list)
    flags: dict[str, bool] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        ok = (
            all(m.verdict is Verdict.PASS for m in self.members)
            and all(t.touches for t in self.tangent_members)
            and all(self.checks.values())
        )
        return Verdict.of(ok)

    @property
    def radicand(self) -> int | None:
        return self.fixed_points.radicand if self.fixed_points else None

    def to_dict(self) -> dict[str, Any]:
        data = dataclass_to_dict(self)
        data["verdict"] = self.verdict.value
        return data


@dataclass
class Witness:
    """An incidence check ``conic(point) == value``.

    ``conjugate_of`` names the witness this one mirrors by conjugation; its
    value is asserted rather than recomputed.
    """

    label: str
    point: Point | None
    value: Scalar | None
    conjugate_of: str | None = None
    note: str | None = None

    @property
    def ok(self) -> bool:
        return self.value == 0


@dataclass
class EllipseOfCenters:
    """The locus of centers of the members of a pencil.

    ``split`` marks a pencil whose centers run along one line; the conic through
    the witnesses is then a line pair containing that line.
    """

    conic: Conic
    witnesses: list[Witness]
    infinite_form_check: Scalar | None = None
    rectangular: bool = False
    kind: str = ""
    split: bool = False
    circle_center: Point | None = None
    circle_center_value: Scalar | None = None
    samples: list[Point] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        ok = all(w.ok for w in self.witnesses)
        if self.infinite_form_check is not None:
            ok = ok and self.infinite_form_check == 0
        if self.circle_center_value is not None:
            ok = ok and self.circle_center_value == 0 and self.rectangular
        return Verdict.of(ok)

    def to_dict(self) -> dict[str, Any]:
        data = dataclass_to_dict(self)
        data["verdict"] = self.verdict.value
        return data


@dataclass
class ButterflyPointResult:
    point: Point
    is_butterfly: bool
    member_param: PencilParam | None = None
    member: Conic | None = None
    every_member: bool = False
    axis: Line | None = None
    infinite_point: Point | None = None
    n_at_infinity: bool | None = None
    coincident_polar: Line | None = None

    @property
    def axis_defined(self) -> bool:
        return self.axis is not None

    def to_dict(self) -> dict[str, Any]:
        return dataclass_to_dict(self)


__all__ = [
    "ButterflyPointResult",
    "ButterflyReport",
    "EllipseOfCenters",
    "MemberCase",
    "MemberCheck",
    "TangentMember",
    "Verdict",
    "Witness",
]
