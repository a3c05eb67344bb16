"""Embedding exceptions: malformed graph files and invalid rotation systems."""

from .base import KiteColorError


class EmbeddingError(KiteColorError):
    """The embedded graph is invalid or an operation referenced a missing element."""

    error_code = "KC_EMB_001"


class GraphFormatError(EmbeddingError):
    """Graph file syntax error. The offending line number is part of the message."""

    error_code = "KC_EMB_002"


class AsymmetricRotationError(EmbeddingError):
    """u appears in rotation(v) but v does not appear in rotation(u)."""

    error_code = "KC_EMB_003"


class InvalidEdgeError(EmbeddingError):
    """A loop or a parallel edge was found in a rotation."""

    error_code = "KC_EMB_004"


class EulerCheckError(EmbeddingError):
    """A plane-tagged component does not satisfy V - E + F = 2."""

    error_code = "KC_EMB_005"


class UnknownEdgeError(EmbeddingError):
    """The referenced edge is not present in the graph."""

    error_code = "KC_EMB_006"
