"""Coloring exceptions for the peeling and extension algorithms."""

from .base import KiteColorError


class ColoringError(KiteColorError):
    """List coloring failed."""

    error_code = "KC_COL_001"


class PreconditionViolatedError(ColoringError):
    """The input does not satisfy the requested guarantee.

    Raised for kites, negative Euler characteristic, maximum degree out of
    range, or lists smaller than the guarantee requires.
    """

    error_code = "KC_COL_002"


class InternalExtensionFailureError(ColoringError):
    """A replay step found no free color. The stuck configuration is in the context."""

    error_code = "KC_COL_003"


class AvailabilityBelowBoundError(ColoringError):
    """A triple-triangle edge has fewer available colors than its lower bound."""

    error_code = "KC_COL_004"


class ExtensionFailureError(ColoringError):
    """The fixed triple-triangle coloring order ran out of colors."""

    error_code = "KC_COL_005"


class OddCycleError(ColoringError):
    """Even-cycle coloring was asked to color an odd cycle."""

    error_code = "KC_COL_006"


class ListTooSmallError(ColoringError):
    """An even-cycle edge has fewer than two available colors."""

    error_code = "KC_COL_007"
