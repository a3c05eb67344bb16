"""Validation exceptions for input files, specs and flags."""

from .base import KiteColorError


class ValidationError(KiteColorError):
    """Input validation failed."""

    error_code = "KC_VAL_001"


class InvalidGenSpecError(ValidationError):
    """Generator or list-sampling parameters are out of range."""

    error_code = "KC_VAL_002"


class ListFormatError(ValidationError):
    """List file is malformed or does not cover every element of the graph."""

    error_code = "KC_VAL_003"


class ColoringFormatError(ValidationError):
    """Coloring file is malformed."""

    error_code = "KC_VAL_004"
