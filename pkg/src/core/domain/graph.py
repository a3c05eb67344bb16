"""Embedded graph models: simple graphs carried together with a rotation system.

Rotations are clockwise. Face tracing follows the rule: the dart after
(u -> v) is (v -> w) where w is the cyclic successor of u in rotation(v).
"""

from collections.abc import Iterator, KeysView, Sequence
from dataclasses import dataclass
from enum import Enum

from .exceptions import AsymmetricRotationError, InvalidEdgeError, UnknownEdgeError

VertexId = int
EdgeId = tuple[int, int]
Dart = tuple[int, int]


def edge_id(u: int, v: int) -> EdgeId:
    """Return the canonical (sorted) identifier of edge uv."""
    return (u, v) if u < v else (v, u)


def format_edge(e: EdgeId) -> str:
    """Render an edge as ``u-v`` for reports and diagnostics."""
    return f"{e[0]}-{e[1]}"


class SurfaceTag(str, Enum):
    """Surface an embedding is declared to live on.

    Attributes:
        PLANE: Every component must satisfy V - E + F = 2.
        ANY: Any orientable surface; no Euler check on input.
    """

    PLANE = "plane"
    ANY = "any"


@dataclass(frozen=True)
class Face:
    """A traced face of an embedding.

    Attributes:
        id: Position of the face in tracing order.
        boundary: Darts of the boundary walk, in order. Cut-edges appear twice.
    """

    id: int
    boundary: tuple[Dart, ...]

    @property
    def degree(self) -> int:
        """Boundary length, cut-edges counted twice."""
        return len(self.boundary)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Dart tails in boundary order, one entry per vertex-face incidence."""
        return tuple(tail for tail, _ in self.boundary)


@dataclass(frozen=True)
class Kite:
    """Two 3-cycles sharing ``shared_edge``; ``apexes`` are their third vertices."""

    shared_edge: EdgeId
    apexes: tuple[int, int]


@dataclass(frozen=True)
class EulerReport:
    """Euler characteristic of an embedding.

    Attributes:
        value: V - E + F with the outer faces of separate components merged,
            so a plane graph with c components reports 1 + c.
        components: Number of connected components.
        per_component: V_i - E_i + F_i of every component, in order of smallest vertex.
    """

    value: int
    components: int
    per_component: tuple[int, ...]

    @property
    def connected(self) -> bool:
        return self.components <= 1

    @property
    def nonnegative(self) -> bool:
        """True when every component embeds in a surface of characteristic >= 0."""
        return all(chi >= 0 for chi in self.per_component)

    @property
    def has_zero_component(self) -> bool:
        """True when some component lies on a surface of characteristic 0 (torus)."""
        return any(chi == 0 for chi in self.per_component)


@dataclass(frozen=True)
class GraphStats:
    """Quantities every theorem hypothesis refers to."""

    n: int
    edges: int
    faces: int
    max_degree: int
    min_degree: int
    kites: int
    euler: EulerReport


class EmbeddedGraph:
    """A simple graph with a rotation system.

    Each rotation is stored as a cyclic doubly linked list (successor and
    predecessor maps) so that deleting an edge is O(1). Vertex ids are dense
    0-based integers.
    """

    __slots__ = ("_succ", "_pred", "_edge_count", "surface")

    def __init__(self, n: int, surface: SurfaceTag = SurfaceTag.PLANE) -> None:
        self._succ: list[dict[int, int]] = [{} for _ in range(n)]
        self._pred: list[dict[int, int]] = [{} for _ in range(n)]
        self._edge_count = 0
        self.surface = surface

    @classmethod
    def from_rotations(
        cls,
        rotations: Sequence[Sequence[int]],
        surface: SurfaceTag = SurfaceTag.PLANE,
    ) -> "EmbeddedGraph":
        """Build a graph from per-vertex cyclic neighbor sequences.

        Args:
            rotations: rotations[v] lists the neighbors of v in clockwise order.
            surface: Declared surface of the embedding.

        Returns:
            The embedded graph.

        Raises:
            InvalidEdgeError: A rotation contains v itself or repeats a neighbor,
                or names a vertex outside 0..n-1.
            AsymmetricRotationError: u is listed at v but v is not listed at u.
        """
        n = len(rotations)
        graph = cls(n, surface)
        for v, rotation in enumerate(rotations):
            seen: set[int] = set()
            for u in rotation:
                if not 0 <= u < n:
                    raise InvalidEdgeError(
                        f"rotation of {v} names unknown vertex {u}", context={"vertex": v}
                    )
                if u == v:
                    raise InvalidEdgeError(f"loop at vertex {v}", context={"vertex": v})
                if u in seen:
                    raise InvalidEdgeError(
                        f"parallel edge {v}-{u}", context={"edge": list(edge_id(u, v))}
                    )
                seen.add(u)
            graph._link(v, list(rotation))

        for v in range(n):
            for u in graph._succ[v]:
                if v not in graph._succ[u]:
                    raise AsymmetricRotationError(
                        f"{u} appears in rotation({v}) but {v} is missing from rotation({u})",
                        context={"vertex": v, "neighbor": u},
                    )
        graph._edge_count = sum(len(s) for s in graph._succ) // 2
        return graph

    def _link(self, v: int, rotation: list[int]) -> None:
        k = len(rotation)
        succ = self._succ[v]
        pred = self._pred[v]
        for i, u in enumerate(rotation):
            nxt = rotation[(i + 1) % k]
            succ[u] = nxt
            pred[nxt] = u

    # ------------------------------------------------------------------ queries

    @property
    def n(self) -> int:
        return len(self._succ)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def vertices(self) -> range:
        return range(len(self._succ))

    def degree(self, v: int) -> int:
        return len(self._succ[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._succ]

    def max_degree(self) -> int:
        return max((len(s) for s in self._succ), default=0)

    def min_degree(self) -> int:
        return min((len(s) for s in self._succ), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < len(self._succ) and v in self._succ[u]

    def neighbor_set(self, v: int) -> KeysView[int]:
        """Neighbors of v as a set-like view (no rotation order)."""
        return self._succ[v].keys()

    def rotation(self, v: int) -> list[int]:
        """Neighbors of v in clockwise order, starting at the smallest neighbor."""
        succ = self._succ[v]
        if not succ:
            return []
        start = min(succ)
        order = [start]
        u = succ[start]
        while u != start:
            order.append(u)
            u = succ[u]
        return order

    def successor(self, v: int, u: int) -> int:
        """Cyclic successor of u in rotation(v)."""
        return self._succ[v][u]

    def predecessor(self, v: int, u: int) -> int:
        """Cyclic predecessor of u in rotation(v)."""
        return self._pred[v][u]

    def edges(self) -> list[EdgeId]:
        """All edges as sorted pairs, in increasing order."""
        return [(u, v) for u in range(len(self._succ)) for v in sorted(self._succ[u]) if u < v]

    def darts(self) -> Iterator[Dart]:
        for v in range(len(self._succ)):
            for u in self.rotation(v):
                yield (v, u)

    # ---------------------------------------------------------------- mutation

    def copy(self) -> "EmbeddedGraph":
        clone = EmbeddedGraph(0, self.surface)
        clone._succ = [dict(s) for s in self._succ]
        clone._pred = [dict(p) for p in self._pred]
        clone._edge_count = self._edge_count
        return clone

    def remove_edge(self, u: int, v: int) -> None:
        """Delete edge uv in place; each endpoint loses the other from its rotation.

        Raises:
            UnknownEdgeError: uv is not an edge.
        """
        if not self.has_edge(u, v):
            raise UnknownEdgeError(f"edge {u}-{v} is not in the graph", context={"edge": [u, v]})
        self._unlink(u, v)
        self._unlink(v, u)
        self._edge_count -= 1

    def _unlink(self, v: int, u: int) -> None:
        succ = self._succ[v]
        pred = self._pred[v]
        before = pred.pop(u)
        after = succ.pop(u)
        if before != u:
            succ[before] = after
            pred[after] = before

    def add_edge(
        self,
        u: int,
        v: int,
        *,
        after_u: int | None = None,
        after_v: int | None = None,
    ) -> None:
        """Insert edge uv, placing v right after ``after_u`` in rotation(u) and vice versa.

        An anchor may be omitted only when that endpoint has no neighbors yet.
        """
        if u == v or self.has_edge(u, v):
            raise InvalidEdgeError(f"cannot add edge {u}-{v}", context={"edge": [u, v]})
        self._insert(u, v, after_u)
        self._insert(v, u, after_v)
        self._edge_count += 1

    def _insert(self, v: int, w: int, after: int | None) -> None:
        succ = self._succ[v]
        pred = self._pred[v]
        if after is None:
            if succ:
                raise ValueError(f"vertex {v} already has neighbors; an anchor is required")
            succ[w] = w
            pred[w] = w
            return
        nxt = succ[after]
        succ[after] = w
        pred[w] = after
        succ[w] = nxt
        pred[nxt] = w
