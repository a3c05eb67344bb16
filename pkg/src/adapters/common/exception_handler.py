"""Error reporting shared by the CLI and the scripts.

Turns any exception into the JSON shape of ``KiteColorError.to_dict`` and maps
it onto the command-line exit codes.
"""

import logging
import traceback
from pathlib import PurePath
from typing import Any

from ...core.domain.exceptions import (
    AsymmetricRotationError,
    EulerCheckError,
    GraphFormatError,
    InvalidEdgeError,
    KiteColorError,
    ValidationError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

FOREIGN_ERROR_CODE = "PYTHON_ERR"

# Malformed input is a usage problem, not a failed computation.
USAGE_ERRORS = (
    ValidationError,
    GraphFormatError,
    AsymmetricRotationError,
    InvalidEdgeError,
    EulerCheckError,
)


def _foreign_location(exc: BaseException) -> dict[str, Any]:
    frames = traceback.extract_tb(exc.__traceback__)
    if not frames:
        return {"class": "<unknown>", "method": "<unknown>", "file": "<unknown>", "line": 0}
    last = frames[-1]
    return {
        "class": "<unknown>",
        "method": last.name,
        "file": PurePath(last.filename.replace("\\", "/")).name,
        "line": last.lineno or 0,
    }


def format_exception_json(
    exc: Exception,
    include_trace: bool = False,
    extra_context: dict[str, Any] | None = None,
) -> dict[str, Any]:
    """Structured view of ``exc``.

    Errors from outside the hierarchy (a ``KeyError`` from a bug, an ``OSError``
    from a file read) get the same keys with code ``PYTHON_ERR``.

    Args:
        exc: The exception to describe.
        include_trace: Add ``stack_trace`` lines.
        extra_context: Merged into ``context``.

    Returns:
        Dict with ``error``, ``location`` and optional ``context``, ``cause`` and
        ``stack_trace`` keys.
    """
    if isinstance(exc, KiteColorError):
        result = exc.to_dict(include_trace=include_trace)
    else:
        result = {
            "error": {"type": type(exc).__name__, "code": FOREIGN_ERROR_CODE, "message": str(exc)},
            "location": _foreign_location(exc),
        }
        if include_trace:
            result["stack_trace"] = [
                line.strip() for line in traceback.format_exception(exc) if line.strip()
            ]

    if extra_context:
        result["context"] = {**result.get("context", {}), **extra_context}
    return result


def log_exception(exc: Exception, log: logging.Logger | None = None, level: int = logging.DEBUG) -> None:
    """Log ``exc`` once, tagged with its error code and traceback."""
    (log or logger).log(
        level,
        "%s: %s",
        get_error_code(exc),
        exc,
        exc_info=(type(exc), exc, exc.__traceback__),
        extra={"error_code": get_error_code(exc)},
    )


def get_error_code(exc: Exception) -> str:
    """Error code of ``exc`` (e.g. ``KC_COL_003``), or ``PYTHON_ERR``."""
    return exc.error_code if isinstance(exc, KiteColorError) else FOREIGN_ERROR_CODE


def get_exit_code(exc: Exception) -> int:
    """2 for malformed input or invalid parameters, 1 for every other failure."""
    return EXIT_USAGE if isinstance(exc, USAGE_ERRORS) else EXIT_FAILURE
