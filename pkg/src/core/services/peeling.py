"""Incremental configuration index used while peeling a graph down.

``PeelIndex`` owns a working copy of the graph and answers the same queries
as ``SnapshotFinder`` while edges are deleted, without rescanning the whole
graph each time.

Light edges: each edge whose low endpoint y has degree l <= 6 is filed under
its high endpoint h in a per-(h, l) heap of low ids. The smallest valid id of
every such heap is mirrored into a global heap for l keyed (l + d(h), y, h).
Entries are validated lazily on peek, so the light-edge answer is the same
edge a full scan would return.

4-faces and triple-triangle centers are searched only around vertices whose
faces or degrees changed since they were last checked.
"""

import heapq
import logging
from collections.abc import Iterable

from ..domain import EdgeId, EmbeddedGraph, LightEdge, LightFourFace, TripleTriangleCenter, TwoAltCycle
from .structure import (
    alternating_cycle_among,
    light_four_face_at,
    low_endpoint_order,
    match_triple_triangle,
)

logger = logging.getLogger(__name__)

MAX_LOW = 6


class _VertexPool:
    """Set of vertices popped smallest first."""

    def __init__(self, vertices: Iterable[int] = ()) -> None:
        self._members: set[int] = set(vertices)
        self._heap = sorted(self._members)

    def add(self, v: int) -> None:
        if v not in self._members:
            self._members.add(v)
            heapq.heappush(self._heap, v)

    def pop(self) -> int:
        v = heapq.heappop(self._heap)
        self._members.discard(v)
        return v

    def __bool__(self) -> bool:
        return bool(self._heap)

    def __len__(self) -> int:
        return len(self._heap)


class PeelIndex:
    """FinderSource over a shrinking working copy of a graph."""

    def __init__(self, graph: EmbeddedGraph) -> None:
        self.graph = graph.copy()
        g = self.graph

        self._count = [0] * (g.max_degree() + 2)
        for v in g.vertices():
            self._count[g.degree(v)] += 1
        self._max = g.max_degree()

        self._low_at: dict[tuple[int, int], list[int]] = {}
        self._heaps: list[list[tuple[int, int, int]]] = [[] for _ in range(MAX_LOW + 1)]
        self._twos: set[int] = {v for v in g.vertices() if g.degree(v) == 2}
        self._face_pool = _VertexPool(g.vertices())
        self._center_pool = _VertexPool(v for v in g.vertices() if g.degree(v) <= 6)

        for u, v in g.edges():
            low, high = low_endpoint_order(g, u, v)
            if g.degree(low) <= MAX_LOW:
                self._low_at.setdefault((high, g.degree(low)), []).append(low)
        for (high, level), members in self._low_at.items():
            heapq.heapify(members)
            self._heaps[level].append((level + g.degree(high), members[0], high))
        for heap in self._heaps:
            heapq.heapify(heap)

    # Queries

    def max_degree(self) -> int:
        while self._max > 0 and self._count[self._max] == 0:
            self._max -= 1
        return self._max

    def light_edge(self, sum_bound: int, max_low_degree: int) -> LightEdge | None:
        """Smallest (d(u) + d(v), u, v) edge with d(u) <= min(max_low_degree, 6)."""
        g = self.graph
        best: tuple[int, int, int] | None = None
        for level in range(1, min(max_low_degree, MAX_LOW) + 1):
            heap = self._heaps[level]
            while heap and not self._valid_entry(heap[0], level):
                heapq.heappop(heap)
            if heap and heap[0][0] <= sum_bound and (best is None or heap[0] < best):
                best = heap[0]
        if best is None:
            return None
        _, u, v = best
        return LightEdge(u, v, g.degree(u), g.degree(v))

    def light_four_face(self) -> LightFourFace | None:
        while self._face_pool:
            v = self._face_pool.pop()
            found = light_four_face_at(self.graph, v)
            if found is not None:
                self._face_pool.add(v)
                return found
        return None

    def triple_triangle_center(self) -> TripleTriangleCenter | None:
        while self._center_pool:
            x = self._center_pool.pop()
            found = match_triple_triangle(self.graph, x)
            if found is not None:
                self._center_pool.add(x)
                return found
        return None

    def two_alternating_cycle(self) -> TwoAltCycle | None:
        return alternating_cycle_among(self.graph, self._twos)

    # Updates

    def remove_edges(self, edges: Iterable[EdgeId]) -> None:
        """Delete ``edges`` from the working copy and update every index."""
        g = self.graph
        for u, v in edges:
            side_a, side_b = g.successor(v, u), g.successor(u, v)
            g.remove_edge(u, v)
            self._center_pool.add(side_a)
            self._center_pool.add(side_b)
            for x, partner in ((u, v), (v, u)):
                self._degree_dropped(x, partner)

    def _degree_dropped(self, x: int, partner: int) -> None:
        g = self.graph
        new = g.degree(x)
        old = new + 1
        self._count[old] -= 1
        self._count[new] += 1
        if new == 2:
            self._twos.add(x)
        else:
            self._twos.discard(x)

        self._face_pool.add(x)
        if new <= 6:
            self._center_pool.add(x)
            for y in g.neighbor_set(x):
                self._center_pool.add(y)

        for level in range(1, MAX_LOW + 1):
            self._refresh(x, level)
        if old <= MAX_LOW:
            self._refresh(partner, old)
            for h in g.neighbor_set(x):
                self._refresh(h, old)
        if new <= MAX_LOW:
            for h in g.neighbor_set(x):
                low, high = low_endpoint_order(g, x, h)
                level = g.degree(low)
                if level <= MAX_LOW:
                    heapq.heappush(self._low_at.setdefault((high, level), []), low)
                    heapq.heappush(self._heaps[level], (level + g.degree(high), low, high))

    def _valid_member(self, y: int, high: int, level: int) -> bool:
        g = self.graph
        return (
            g.has_edge(y, high)
            and g.degree(y) == level
            and low_endpoint_order(g, y, high) == (y, high)
        )

    def _valid_entry(self, entry: tuple[int, int, int], level: int) -> bool:
        total, y, high = entry
        return self._valid_member(y, high, level) and level + self.graph.degree(high) == total

    def _refresh(self, high: int, level: int) -> None:
        """Re-mirror the smallest valid low neighbor of degree ``level`` at ``high``."""
        members = self._low_at.get((high, level))
        if not members:
            return
        while members and not self._valid_member(members[0], high, level):
            heapq.heappop(members)
        if members:
            heapq.heappush(
                self._heaps[level], (level + self.graph.degree(high), members[0], high)
            )
        else:
            del self._low_at[(high, level)]
