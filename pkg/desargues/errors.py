"""Exception hierarchy with stable machine-readable codes."""

from __future__ import annotations


class DesarguesError(ValueError):
    """Base class for every error raised by the library.

    ``code`` is the machine-readable identifier used in CLI reports and
    ``exit_code`` the process status the CLI maps the error to.
    """

    code = "desargues_error"
    exit_code = 1


# ---------------------------------------------------------------------------
# Exact arithmetic
# ---------------------------------------------------------------------------


class ZeroForm(DesarguesError):
    code = "zero_form"


class UnreducedRadical(DesarguesError):
    code = "unreduced_radical"


class MixedRadicals(DesarguesError):
    code = "mixed_radicals"


class NotSquareFree(DesarguesError):
    code = "not_square_free"


class NotOrderable(DesarguesError):
    code = "not_orderable"


class ZeroVector(DesarguesError):
    code = "zero_vector"


# ---------------------------------------------------------------------------
# Projective core
# ---------------------------------------------------------------------------


class CoincidentPoints(DesarguesError):
    code = "coincident_points"


class CoincidentLines(DesarguesError):
    code = "coincident_lines"


class IndeterminateCrossRatio(DesarguesError):
    code = "indeterminate_cross_ratio"


class DegenerateRange(DesarguesError):
    code = "degenerate_range"


class PointOffLine(DesarguesError):
    code = "point_off_line"


class PointAtInfinity(DesarguesError):
    code = "point_at_infinity"


# ---------------------------------------------------------------------------
# Conics
# ---------------------------------------------------------------------------


class KernelPoint(DesarguesError):
    code = "kernel_point"


class NoUniquePole(DesarguesError):
    code = "no_unique_pole"


class NoCenter(DesarguesError):
    code = "no_center"


class CircleHasNoUniqueAxes(DesarguesError):
    code = "circle_has_no_unique_axes"


class DegenerateConic(DesarguesError):
    code = "degenerate_conic"


class NoUniqueConic(DesarguesError):
    code = "no_unique_conic"


# ---------------------------------------------------------------------------
# Involutions and pencils
# ---------------------------------------------------------------------------


class RankDeficient(DesarguesError):
    code = "rank_deficient"


class Inconsistent(DesarguesError):
    code = "inconsistent"


class DegenerateRelation(DesarguesError):
    code = "degenerate_relation"


class CoincidentFixedPoints(DesarguesError):
    code = "coincident_fixed_points"


class NotGeneralPosition(DesarguesError):
    code = "not_general_position"


class BasePoint(DesarguesError):
    code = "base_point"


class LineThroughBasePoint(DesarguesError):
    code = "line_through_base_point"


# ---------------------------------------------------------------------------
# Butterfly verifiers: hypothesis failures, not theorem failures
# ---------------------------------------------------------------------------


class MismatchAgainstDesargues(DesarguesError):
    code = "mismatch_against_desargues"


class NoSuchConfiguration(DesarguesError):
    code = "no_such_configuration"


class NotConcyclic(DesarguesError):
    code = "not_concyclic"


class EquidistanceFails(DesarguesError):
    code = "equidistance_fails"


class NoProperCenter(DesarguesError):
    code = "no_proper_center"


class FixedPointMismatch(DesarguesError):
    code = "fixed_point_mismatch"


class NotPerpendicular(DesarguesError):
    code = "not_perpendicular"


class NotThroughDiagonalPoint(DesarguesError):
    code = "not_through_diagonal_point"


class DegenerateLocus(DesarguesError):
    code = "degenerate_locus"


class AxisUndefined(DesarguesError):
    code = "axis_undefined"


# ---------------------------------------------------------------------------
# Scenes and rendering
# ---------------------------------------------------------------------------


class ParseError(DesarguesError):
    code = "parse_error"


class UnknownReference(DesarguesError):
    code = "unknown_reference"


class EmptyViewport(DesarguesError):
    code = "empty_viewport"
