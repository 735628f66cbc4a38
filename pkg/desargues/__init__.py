"""Exact projective geometry of conic pencils and the butterfly theorems."""

from __future__ import annotations

try:
    from ._version import version as __version__
except ImportError:  # pragma: no cover
    __version__ = "0.1.0-alpha.0"

from .errors import DesarguesError

__all__ = ["DesarguesError", "__version__"]
