"""Seeded random configurations and the consistency sweep run by ``desargues sweep``."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any

import numpy as np

from desargues.arith.binary import HomParam
from desargues.conics.intersection import restrict_to_line
from desargues.errors import DesarguesError, RankDeficient
from desargues.involution.relation import apolar, apply, involution_from_pairs
from desargues.pencil.pencil import (
    Pencil,
    check_admissible,
    degenerate_members,
    desargues_involution,
    member_restriction,
    pencil_new,
)
from desargues.projective.elements import Line, Point, general_position
from desargues.scene.codec import dataclass_to_dict

from .sampling import random_params

logger = logging.getLogger(__name__)

COORDINATE_BOUND = 20
MEMBERS_PER_CONFIGURATION = 10
ORDER_TWO_PARAMS = 5


def _int(rng: np.random.Generator, low: int, high: int) -> int:
    return int(rng.integers(low, high + 1))


def random_point(rng: np.random.Generator, bound: int = COORDINATE_BOUND) -> Point:
    return Point(_int(rng, -bound, bound), _int(rng, -bound, bound), 1)


def random_pencil(rng: np.random.Generator, bound: int = COORDINATE_BOUND) -> Pencil:
    """Draw four integer points in general position."""
    while True:
        points = [random_point(rng, bound) for _ in range(4)]
        if general_position(*points):
            return pencil_new(*points)


def random_admissible_line(
    rng: np.random.Generator, p: Pencil, bound: int = COORDINATE_BOUND
) -> Line:
    """Draw an affine integer line missing every base point."""
    while True:
        a, b, c = (_int(rng, -bound, bound) for _ in range(3))
        if a == 0 and b == 0:
            continue
        line = Line(a, b, c)
        try:
            check_admissible(p, line)
        except DesarguesError:
            continue
        return line


def _circle_point(h: int, k: int, r: int, m: int, n: int) -> Point:
    # (cos, sin) = ((n² − m²), 2mn) / (n² + m²)
    d = n * n + m * m
    x = Fraction(h) + Fraction(r * (n * n - m * m), d)
    y = Fraction(k) + Fraction(r * 2 * m * n, d)
    return Point(x, y, 1)


def random_concyclic_pencil(rng: np.random.Generator, bound: int = COORDINATE_BOUND) -> Pencil:
    """Draw four distinct rational points on a circle with integer center and radius."""
    h, k = _int(rng, -bound, bound), _int(rng, -bound, bound)
    r = _int(rng, 1, bound)
    while True:
        slopes = [(_int(rng, -bound, bound), _int(rng, 1, bound)) for _ in range(4)]
        points = list(dict.fromkeys(_circle_point(h, k, r, m, n) for m, n in slopes))
        if len(points) == 4 and general_position(*points):
            return pencil_new(*points)


@dataclass
class SweepResult:
    seed: int
    configurations: int = 0
    members_checked: int = 0
    pair_checks: int = 0
    degenerate_pair_checks: int = 0
    order_two_checks: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        data = dataclass_to_dict(self)
        data["verdict"] = "pass" if self.ok else "fail"
        return data


def check_configuration(
    rng: np.random.Generator, p: Pencil, line: Line, result: SweepResult
) -> None:
    """Run the consistency and order-two checks for one pencil and line."""
    inv, chart = desargues_involution(p, line)
    fixed_form = inv.fixed_form
    line_pairs = [restrict_to_line(g, chart) for _, g in degenerate_members(p)]
    for (i, qa), (j, qb) in combinations(enumerate(line_pairs, start=1), 2):
        try:
            from_two = involution_from_pairs(qa, qb)
        except RankDeficient:
            result.skipped += 1
            continue
        result.degenerate_pair_checks += 1
        if from_two != inv:
            result.failures.append(
                f"line pairs G{i}, G{j} on {line} give {from_two}, the three together give {inv}"
            )

    seed = _int(rng, 0, 2**31 - 1)
    params = random_params(MEMBERS_PER_CONFIGURATION, seed)
    forms = [member_restriction(p, chart, t) for t in params]
    for t, q in zip(params, forms):
        result.members_checked += 1
        if apolar(q, fixed_form) != 0:
            base = ", ".join(map(str, p.base_points))
            result.failures.append(f"member {t} of the pencil on {base} is not conjugate on {line}")

    for qa, qb in combinations(forms[:3], 2):
        try:
            candidate = involution_from_pairs(qa, qb)
        except RankDeficient:
            result.skipped += 1
            continue
        result.pair_checks += 1
        if candidate != inv:
            result.failures.append(f"pairs {qa}, {qb} on {line} give {candidate}, not {inv}")

    for _ in range(ORDER_TWO_PARAMS):
        u = HomParam(
            _int(rng, -COORDINATE_BOUND, COORDINATE_BOUND), _int(rng, 1, COORDINATE_BOUND)
        )
        result.order_two_checks += 1
        if apply(inv, apply(inv, u)) != u:
            result.failures.append(f"involution {inv} on {line} is not of order two at {u}")


def run_sweep(configurations: int, seed: int) -> SweepResult:
    rng = np.random.default_rng(seed)
    result = SweepResult(seed=seed)
    for _ in range(configurations):
        p = random_pencil(rng)
        line = random_admissible_line(rng, p)
        check_configuration(rng, p, line, result)
        result.configurations += 1
    logger.info(
        "Sweep of %d configurations (seed %d): %d members, %d failures",
        result.configurations,
        seed,
        result.members_checked,
        len(result.failures),
    )
    return result


__all__ = [
    "SweepResult",
    "check_configuration",
    "random_admissible_line",
    "random_concyclic_pencil",
    "random_pencil",
    "random_point",
    "run_sweep",
]
