"""Logging setup with Rich formatting on stderr."""

from __future__ import annotations

import logging
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG", "NOTSET")
FILE_FORMAT = "%(asctime)s %(levelname)s %(name)s - %(message)s"


def parse_level(level: str | int) -> int:
    """Return the numeric level for ``level``, raising ``ValueError`` on unknown names."""
    if isinstance(level, int):
        return level
    numeric = logging.getLevelName(level.upper())
    if isinstance(numeric, str):  # logging returns 'Level X'
        raise ValueError(f"Invalid log level '{level}'. Allowed levels: {', '.join(LEVELS)}")
    return numeric


def _drop_handlers(root: logging.Logger) -> None:
    for handler in list(root.handlers):
        root.removeHandler(handler)
        try:
            handler.close()
        except OSError as exc:  # pragma: no cover
            logging.getLogger(__name__).warning("Could not close %r", handler, exc_info=exc)


def configure_logging(
    level: str | int = "WARNING",
    log_file: str | Path | None = None,
    *,
    no_color: bool = False,
) -> None:
    """Route records to a Rich handler on stderr and, optionally, to ``log_file``.

    stdout is left to command reports. Unknown level names fall back to WARNING.
    """
    try:
        numeric_level = parse_level(level)
    except ValueError:
        numeric_level = logging.WARNING

    root = logging.getLogger()
    _drop_handlers(root)
    root.setLevel(numeric_level)

    handlers: list[logging.Handler] = [
        RichHandler(
            console=Console(stderr=True, no_color=no_color),
            rich_tracebacks=True,
            markup=True,
            show_path=False,
        )
    ]
    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
        handlers.append(file_handler)
    for handler in handlers:
        handler.setLevel(numeric_level)
        root.addHandler(handler)

    logging.captureWarnings(True)
    logging.getLogger("py.warnings").setLevel(
        logging.WARNING if numeric_level <= logging.DEBUG else logging.ERROR
    )


__all__ = ["LEVELS", "configure_logging", "parse_level"]
