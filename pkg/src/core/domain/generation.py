"""Parameter models for the graph generator and the exhaustive oracle."""

from dataclasses import dataclass

from .exceptions import InvalidGenSpecError, ValidationError

SEED_LIMIT = 1 << 64


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated kite-free plane graph.

    Attributes:
        n: Vertex count (>= 3).
        seed: 64-bit seed; fully determines the output.
        target_min_delta: Best-effort lower bound on the maximum degree (0 disables).
        triangle_free: Also delete one edge of every remaining triangle.
        max_delta: Optional cap on the maximum degree, enforced by deleting
            non-bridge edges at over-cap vertices.
    """

    n: int
    seed: int = 0
    target_min_delta: int = 0
    triangle_free: bool = False
    max_delta: int | None = None

    def __post_init__(self) -> None:
        if self.n < 3:
            raise InvalidGenSpecError(f"n must be at least 3, got {self.n}")
        if not 0 <= self.seed < SEED_LIMIT:
            raise InvalidGenSpecError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.target_min_delta < 0:
            raise InvalidGenSpecError("target_min_delta must be nonnegative")
        if self.max_delta is not None:
            if self.max_delta < 2:
                raise InvalidGenSpecError("max_delta must be at least 2")
            if self.target_min_delta > self.max_delta:
                raise InvalidGenSpecError(
                    "target_min_delta exceeds max_delta",
                    context={"target_min_delta": self.target_min_delta, "max_delta": self.max_delta},
                )


@dataclass(frozen=True)
class OracleBudget:
    """Size limits for the exhaustive search.

    Attributes:
        max_elements: Largest number of uncolored elements accepted.
        max_nodes: Search-node cap before giving up.
    """

    max_elements: int = 30
    max_nodes: int = 200_000

    def __post_init__(self) -> None:
        if self.max_elements <= 0 or self.max_nodes <= 0:
            raise ValidationError("oracle budget values must be positive")
