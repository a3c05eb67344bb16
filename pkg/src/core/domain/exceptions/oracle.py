"""Oracle exceptions for the exhaustive backtracking search."""

from .base import KiteColorError


class OracleError(KiteColorError):
    """Exhaustive search failed."""

    error_code = "KC_ORC_001"


class BudgetExceededError(OracleError):
    """The instance is larger than the element cap or the search hit its node cap.

    This is never a statement that no coloring exists.
    """

    error_code = "KC_ORC_002"


class NoColoringFoundError(OracleError):
    """The search was exhaustive and no proper list coloring exists."""

    error_code = "KC_ORC_003"
