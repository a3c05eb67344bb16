"""Exception hierarchy for kitecolor.

Each exception carries an error code, the raise location, optional cause
chaining, and a JSON-serializable payload. Import from this package directly:

    from src.core.domain.exceptions import KiteColorError, PreconditionViolatedError
"""

# Base classes
from .base import ExceptionContext, KiteColorError

# Coloring exceptions
from .coloring import (
    AvailabilityBelowBoundError,
    ColoringError,
    ExtensionFailureError,
    InternalExtensionFailureError,
    ListTooSmallError,
    OddCycleError,
    PreconditionViolatedError,
)

# Embedding exceptions
from .embedding import (
    AsymmetricRotationError,
    EmbeddingError,
    EulerCheckError,
    GraphFormatError,
    InvalidEdgeError,
    UnknownEdgeError,
)

# Oracle exceptions
from .oracle import (
    BudgetExceededError,
    NoColoringFoundError,
    OracleError,
)

# Structure exceptions
from .structure import (
    ConfigurationNotFoundError,
    StructureError,
)

# Validation exceptions
from .validation import (
    ColoringFormatError,
    InvalidGenSpecError,
    ListFormatError,
    ValidationError,
)

__all__ = [
    # Base
    "ExceptionContext",
    "KiteColorError",
    # Embedding
    "EmbeddingError",
    "GraphFormatError",
    "AsymmetricRotationError",
    "InvalidEdgeError",
    "EulerCheckError",
    "UnknownEdgeError",
    # Structure
    "StructureError",
    "ConfigurationNotFoundError",
    # Coloring
    "ColoringError",
    "PreconditionViolatedError",
    "InternalExtensionFailureError",
    "AvailabilityBelowBoundError",
    "ExtensionFailureError",
    "OddCycleError",
    "ListTooSmallError",
    # Oracle
    "OracleError",
    "BudgetExceededError",
    "NoColoringFoundError",
    # Validation
    "ValidationError",
    "InvalidGenSpecError",
    "ListFormatError",
    "ColoringFormatError",
]
