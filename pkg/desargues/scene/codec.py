"""Exact JSON encoding of geometric values.

Numbers are always strings (``"3/5"``, ``"-2"``) so that no value passes
through a float; an element of Q(√d) is ``{"a": "p/q", "b": "p/q", "d": d}``.
"""

from __future__ import annotations

import dataclasses
from enum import Enum
from fractions import Fraction
from functools import singledispatch
from typing import Any

from desargues.arith.binary import BinaryQuadratic, HomParam, Infinity, RootPair
from desargues.arith.quadext import QuadExt, Scalar
from desargues.arith.scalar import simplify
from desargues.conics.conic import Conic
from desargues.errors import ParseError
from desargues.involution.relation import InvolutionRel
from desargues.pencil.pencil import Pencil, PencilParam
from desargues.projective.chart import LineChart
from desargues.projective.elements import Line, Point


def encode_fraction(value: Fraction) -> str:
    return str(value)


def encode_scalar(value: Scalar) -> str | dict[str, Any]:
    value = simplify(value)
    if isinstance(value, QuadExt):
        return {"a": str(value.a), "b": str(value.b), "d": value.d}
    return encode_fraction(value)


@singledispatch
def to_jsonable(obj: Any) -> Any:
    """Convert library values to JSON-compatible structures."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    raise TypeError(f"cannot encode {type(obj).__name__} exactly")


@to_jsonable.register
def _(obj: Fraction) -> str:
    return encode_fraction(obj)


@to_jsonable.register
def _(obj: QuadExt) -> Any:
    return encode_scalar(obj)


@to_jsonable.register
def _(obj: Enum) -> Any:
    return obj.value


@to_jsonable.register
def _(obj: HomParam) -> Any:
    value = obj.value
    if isinstance(value, Infinity):
        return value.value
    return encode_scalar(value)


@to_jsonable.register
def _(obj: PencilParam) -> list[Any]:
    return [encode_scalar(obj.lam), encode_scalar(obj.mu)]


@to_jsonable.register
def _(obj: Point) -> list[Any]:
    return [encode_scalar(c) for c in obj.coords]


@to_jsonable.register
def _(obj: Line) -> list[Any]:
    return [encode_scalar(c) for c in obj.coords]


@to_jsonable.register
def _(obj: Conic) -> list[Any]:
    return [encode_scalar(c) for c in obj.coefficients]


@to_jsonable.register
def _(obj: BinaryQuadratic) -> list[Any]:
    return [encode_scalar(c) for c in obj.coefficients]


@to_jsonable.register
def _(obj: InvolutionRel) -> list[Any]:
    return [encode_scalar(c) for c in obj.coefficients]


@to_jsonable.register
def _(obj: RootPair) -> dict[str, Any]:
    return {
        "roots": [to_jsonable(obj.first), to_jsonable(obj.second)],
        "double": obj.double,
        "discriminant": encode_scalar(obj.discriminant),
        "radicand": obj.radicand,
    }


@to_jsonable.register
def _(obj: LineChart) -> dict[str, Any]:
    return {"line": to_jsonable(obj.line), "r0": to_jsonable(obj.r0), "r1": to_jsonable(obj.r1)}


@to_jsonable.register
def _(obj: Pencil) -> list[Any]:
    return [to_jsonable(p) for p in obj.base_points]


@to_jsonable.register(dict)
def _(obj: dict[Any, Any]) -> dict[str, Any]:
    return {str(k): to_jsonable(v) for k, v in obj.items()}


@to_jsonable.register(list)
@to_jsonable.register(tuple)
def _(obj: Any) -> list[Any]:
    return [to_jsonable(v) for v in obj]


def dataclass_to_dict(obj: Any) -> dict[str, Any]:
    data = to_jsonable(obj)
    if not isinstance(data, dict):
        raise TypeError(f"{type(obj).__name__} does not encode to an object")
    return data


# -- decoding ---------------------------------------------------------------


def decode_scalar(raw: object) -> Scalar:
    """Decode ``"p/q"``, an integer or a ``{"a", "b", "d"}`` object."""
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ParseError(f"{raw!r} is not an exact number; write it as a string like \"3/5\"")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot read {raw!r} as an exact rational") from exc
    if isinstance(raw, dict) and set(raw) == {"a", "b", "d"}:
        d = raw["d"]
        if not isinstance(d, int) or isinstance(d, bool):
            raise ParseError(f"radicand must be an integer, got {d!r}")
        a, b = decode_scalar(raw["a"]), decode_scalar(raw["b"])
        if not isinstance(a, Fraction) or not isinstance(b, Fraction):
            raise ParseError("the parts of a + b*sqrt(d) must be rational")
        try:
            return simplify(QuadExt(a, b, d))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"cannot read {raw!r} as an exact scalar")


def decode_point(raw: object) -> Point:
    """Decode ``[x, y, z]`` homogeneous or ``{"x": …, "y": …}`` affine coordinates."""
    if isinstance(raw, dict) and set(raw) == {"x", "y"}:
        return Point(decode_scalar(raw["x"]), decode_scalar(raw["y"]), 1)
    if isinstance(raw, (list, tuple)) and len(raw) == 3:
        return Point(*(decode_scalar(v) for v in raw))
    raise ParseError(f"a point is [x, y, z] or {{\"x\": .., \"y\": ..}}, got {raw!r}")


def decode_line(raw: object) -> Line:
    if isinstance(raw, (list, tuple)) and len(raw) == 3:
        return Line(*(decode_scalar(v) for v in raw))
    raise ParseError(f"a line is [l1, l2, l3], got {raw!r}")


def decode_conic(raw: object) -> Conic:
    if isinstance(raw, (list, tuple)) and len(raw) == 6:
        return Conic(*(decode_scalar(v) for v in raw))
    raise ParseError(f"a conic is [a, b, c, d, e, f], got {raw!r}")


def decode_param(raw: object) -> HomParam:
    """Decode ``"inf"``, a scalar, ``"s:t"`` or ``[s, t]``."""
    if isinstance(raw, (list, tuple)) and len(raw) == 2:
        return HomParam(decode_scalar(raw[0]), decode_scalar(raw[1]))
    if isinstance(raw, str):
        try:
            return HomParam.parse(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot read {raw!r} as a line parameter") from exc
    return HomParam(decode_scalar(raw))


def decode_pencil_param(raw: object) -> PencilParam:
    return PencilParam.of(decode_param(raw))


__all__ = [
    "dataclass_to_dict",
    "decode_conic",
    "decode_line",
    "decode_param",
    "decode_pencil_param",
    "decode_point",
    "decode_scalar",
    "encode_scalar",
    "to_jsonable",
]
