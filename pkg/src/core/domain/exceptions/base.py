"""Root of the kitecolor exception hierarchy.

``KiteColorError`` records where it was raised and what caused it, and renders
itself as a JSON-ready dict for the CLI and for log records.
"""

import inspect
import traceback
from dataclasses import dataclass
from pathlib import PurePath
from types import FrameType
from typing import Any

_UNKNOWN = "<unknown>"


@dataclass(frozen=True)
class ExceptionContext:
    """Raise site of a kitecolor error."""

    class_name: str
    method_name: str
    file_name: str
    line_number: int

    @classmethod
    def from_frame(cls, frame: FrameType | None) -> "ExceptionContext":
        if frame is None:
            return cls(_UNKNOWN, _UNKNOWN, _UNKNOWN, 0)
        owner = frame.f_locals.get("self")
        return cls(
            class_name=type(owner).__name__ if owner is not None else "<module>",
            method_name=frame.f_code.co_name,
            file_name=PurePath(frame.f_code.co_filename.replace("\\", "/")).name,
            line_number=frame.f_lineno,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "class": self.class_name,
            "method": self.method_name,
            "file": self.file_name,
            "line": self.line_number,
        }


def _raise_site() -> FrameType | None:
    """First frame outside the exception constructors."""
    frame = inspect.currentframe()
    while frame is not None and (
        frame.f_code.co_name in ("_raise_site", "__init__")
        and isinstance(frame.f_locals.get("self"), BaseException | None)
    ):
        frame = frame.f_back
    return frame


class KiteColorError(Exception):
    """Base class for every error kitecolor raises.

    ``context`` holds diagnosis data such as element ids, the configuration being
    replayed or an audit summary; it must be JSON serializable.

    Example:
        try:
            lists = parse_lists(text, graph)
        except ListFormatError as e:
            raise PreconditionViolatedError("no usable lists", cause=e, context={"path": p})
    """

    error_code: str = "KC_ERR_001"

    def __init__(
        self,
        message: str,
        *,
        cause: Exception | None = None,
        context: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.cause = cause
        self.extra_context = dict(context or {})
        self.location = ExceptionContext.from_frame(_raise_site())
        if cause is not None:
            self.__cause__ = cause

    @property
    def stack_trace(self) -> list[str] | None:
        """Formatted traceback of the cause, if there is one."""
        if self.cause is None:
            return None
        lines = traceback.format_exception(self.cause)
        return [line.rstrip() for chunk in lines for line in chunk.splitlines() if line.strip()]

    def to_dict(self, include_trace: bool = False) -> dict[str, Any]:
        result: dict[str, Any] = {
            "error": {
                "type": type(self).__name__,
                "code": self.error_code,
                "message": self.message,
            },
            "location": self.location.to_dict(),
        }
        if self.extra_context:
            result["context"] = self.extra_context
        if self.cause is not None:
            result["cause"] = {"type": type(self.cause).__name__, "message": str(self.cause)}
            if include_trace:
                result["stack_trace"] = self.stack_trace
        return result
