"""Structure exceptions raised by the reducible-configuration finders."""

from .base import KiteColorError


class StructureError(KiteColorError):
    """Structural search failed."""

    error_code = "KC_STR_001"


class ConfigurationNotFoundError(StructureError):
    """No configuration of the requested kind exists.

    Under the finder's hypotheses this signals a bug or a violated precondition.
    The discharging audit of the graph is attached as ``context["audit"]``.
    """

    error_code = "KC_STR_002"
