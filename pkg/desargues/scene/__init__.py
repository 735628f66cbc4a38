"""Scene files and the exact JSON codec shared by every report."""

from .codec import (
    dataclass_to_dict,
    decode_conic,
    decode_line,
    decode_param,
    decode_pencil_param,
    decode_point,
    decode_scalar,
    encode_scalar,
    to_jsonable,
)
from .model import Scene, SceneSpec, dump_scene, load_scene, parse_scene

__all__ = [
    "Scene",
    "SceneSpec",
    "dataclass_to_dict",
    "decode_conic",
    "decode_line",
    "decode_param",
    "decode_pencil_param",
    "decode_point",
    "decode_scalar",
    "dump_scene",
    "encode_scalar",
    "load_scene",
    "parse_scene",
    "to_jsonable",
]
