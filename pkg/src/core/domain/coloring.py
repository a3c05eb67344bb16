"""List assignments, colorings, peel traces and verification results."""

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum

from .configuration import Configuration
from .graph import EdgeId, EmbeddedGraph, edge_id, format_edge


class ColoringMode(str, Enum):
    """Which elements get colors.

    Attributes:
        EDGE: Edges only; incident edges differ.
        TOTAL: Edges and vertices; no two incident or adjacent elements share a color.
    """

    EDGE = "edge"
    TOTAL = "total"


class Guarantee(str, Enum):
    """List-size guarantee a coloring run relies on.

    Attributes:
        DELTA: Lists of size Delta (edge mode, Delta >= 9).
        DELTA_PLUS_1: Lists of size Delta + 1 (edge mode; total mode with Delta >= 9).
        DELTA_PLUS_2: Lists of size Delta + 2 (total mode, Delta >= 7).
    """

    DELTA = "delta"
    DELTA_PLUS_1 = "delta_plus_1"
    DELTA_PLUS_2 = "delta_plus_2"


@dataclass
class ListAssignment:
    """Color lists for every element being colored.

    Lists are stored as sorted tuples of distinct nonnegative integers.

    Attributes:
        mode: EDGE or TOTAL.
        edge_lists: List of every edge, keyed by sorted endpoint pair.
        vertex_lists: List of every vertex (total mode only).
    """

    mode: ColoringMode
    edge_lists: dict[EdgeId, tuple[int, ...]] = field(default_factory=dict)
    vertex_lists: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @classmethod
    def uniform(cls, graph: EmbeddedGraph, k: int, mode: ColoringMode) -> "ListAssignment":
        """Give every element the list {0, ..., k-1}."""
        palette = tuple(range(k))
        lists = cls(mode, {e: palette for e in graph.edges()})
        if mode is ColoringMode.TOTAL:
            lists.vertex_lists = {v: palette for v in graph.vertices()}
        return lists

    def edge_list(self, u: int, v: int) -> tuple[int, ...]:
        return self.edge_lists[edge_id(u, v)]

    def sizes(self) -> Iterator[int]:
        yield from (len(lst) for lst in self.edge_lists.values())
        if self.mode is ColoringMode.TOTAL:
            yield from (len(lst) for lst in self.vertex_lists.values())

    def min_size(self) -> int:
        return min(self.sizes(), default=0)

    def missing_elements(self, graph: EmbeddedGraph) -> list[str]:
        """Elements of ``graph`` that have no list."""
        missing = [format_edge(e) for e in graph.edges() if e not in self.edge_lists]
        if self.mode is ColoringMode.TOTAL:
            missing.extend(str(v) for v in graph.vertices() if v not in self.vertex_lists)
        return missing


@dataclass
class Coloring:
    """A (possibly partial) list coloring.

    Attributes:
        mode: EDGE or TOTAL.
        edge_color: Color of every colored edge.
        vertex_color: Color of every colored vertex (total mode).
    """

    mode: ColoringMode
    edge_color: dict[EdgeId, int] = field(default_factory=dict)
    vertex_color: dict[int, int] = field(default_factory=dict)

    def color_of(self, u: int, v: int) -> int | None:
        return self.edge_color.get(edge_id(u, v))


@dataclass(frozen=True)
class PeelStep:
    """One peeling step: the configuration found and the edges it removed."""

    configuration: Configuration
    removed: tuple[EdgeId, ...]


@dataclass
class PeelTrace:
    """Stack of peeling steps; replaying it in reverse rebuilds the input graph."""

    steps: list[PeelStep] = field(default_factory=list)

    def push(self, step: PeelStep) -> None:
        self.steps.append(step)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[PeelStep]:
        return iter(self.steps)

    def __reversed__(self) -> Iterator[PeelStep]:
        return reversed(self.steps)


class ViolationKind(str, Enum):
    """Ways a coloring can fail verification."""

    ADJACENT_EDGES = "adjacent_edges"
    EDGE_VERTEX = "edge_vertex"
    ADJACENT_VERTICES = "adjacent_vertices"
    NOT_IN_LIST = "not_in_list"
    UNCOLORED = "uncolored"
    UNKNOWN_ELEMENT = "unknown_element"


@dataclass(frozen=True)
class Violation:
    """A single verification failure.

    Attributes:
        kind: What went wrong.
        elements: Offending elements, rendered as ``u-v`` for edges and ``v`` for vertices.
        color: The color involved, when there is one.
    """

    kind: ViolationKind
    elements: tuple[str, ...]
    color: int | None = None


@dataclass
class VerificationResult:
    """Outcome of verifying a coloring; violations are data, not errors."""

    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations
