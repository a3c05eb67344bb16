"""Deterministic random kite-free plane graphs and list assignments.

Randomness comes from SplitMix64 so a seed reproduces the same graph on any
platform:

    state = state + 0x9E3779B97F4A7C15
    z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9
    z = (z ^ z >> 27) * 0x94D049BB133111EB
    output z ^ z >> 31                         (all mod 2**64)

``randbelow(m)`` is ``(next() * m) >> 64`` and k-subsets use Floyd's algorithm.
"""

import heapq
import logging

from ..domain import ColoringMode, EmbeddedGraph, GenSpec, ListAssignment, SurfaceTag
from ..domain.exceptions import InvalidGenSpecError
from .embedding import common_neighbors, face_walk

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_1 = 0xBF58476D1CE4E5B9
MIX_2 = 0x94D049BB133111EB


class SplitMix64:
    """64-bit SplitMix generator."""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX_1) & MASK64
        z = ((z ^ (z >> 27)) * MIX_2) & MASK64
        return z ^ (z >> 31)

    def randbelow(self, m: int) -> int:
        """Uniform-ish integer in [0, m)."""
        return (self.next() * m) >> 64

    def sample(self, population: int, k: int) -> list[int]:
        """Sorted k-subset of range(population), by Floyd's algorithm."""
        chosen: set[int] = set()
        for j in range(population - k, population):
            t = self.randbelow(j + 1)
            chosen.add(j if t in chosen else t)
        return sorted(chosen)


def stacked_triangulation(n: int, rng: SplitMix64, bias_quarters: int = 0) -> EmbeddedGraph:
    """Random stacked triangulation on n >= 3 vertices.

    Vertex x (x = 3..n-1) is inserted into a face and joined to its three
    corners. The face is uniform among current faces, except that with
    probability ``bias_quarters / 4`` it is a face at the current
    maximum-degree vertex (the hub), reached through a random hub neighbor.
    """
    g = EmbeddedGraph(n, SurfaceTag.PLANE)
    g.add_edge(0, 1)
    g.add_edge(1, 2, after_u=0)
    g.add_edge(2, 0, after_u=1, after_v=1)

    faces: list[tuple[int, int, int]] = [(0, 1, 2), (0, 2, 1)]
    dart_face: dict[tuple[int, int], int] = {}
    for index, (a, b, c) in enumerate(faces):
        dart_face.update({(a, b): index, (b, c): index, (c, a): index})
    neighbors: list[list[int]] = [[] for _ in range(n)]
    neighbors[0] += [1, 2]
    neighbors[1] += [0, 2]
    neighbors[2] += [1, 0]
    hub = 0

    for x in range(3, n):
        if bias_quarters and rng.randbelow(4) < bias_quarters:
            y = neighbors[hub][rng.randbelow(len(neighbors[hub]))]
            r = dart_face[(hub, y)]
        else:
            r = rng.randbelow(len(faces))
        a, b, c = faces[r]

        g.add_edge(x, a, after_v=c)
        g.add_edge(x, c, after_u=a, after_v=b)
        g.add_edge(x, b, after_u=c, after_v=a)
        neighbors[x] += [a, c, b]
        for corner in (a, b, c):
            neighbors[corner].append(x)

        faces[r] = (a, b, x)
        faces.append((b, c, x))
        faces.append((c, a, x))
        for index in (r, len(faces) - 2, len(faces) - 1):
            p, q, s = faces[index]
            dart_face.update({(p, q): index, (q, s): index, (s, p): index})

        for v in (a, b, c, x):
            if g.degree(v) > g.degree(hub) or (g.degree(v) == g.degree(hub) and v < hub):
                hub = v
    return g


def remove_kites(graph: EmbeddedGraph) -> int:
    """Delete kite shared edges, smallest edge first, until no kite remains.

    Returns:
        Number of deleted edges.
    """
    heap = [e for e in graph.edges() if len(common_neighbors(graph, *e)) >= 2]
    heapq.heapify(heap)
    deleted = 0
    while heap:
        u, v = heapq.heappop(heap)
        if graph.has_edge(u, v) and len(common_neighbors(graph, u, v)) >= 2:
            graph.remove_edge(u, v)
            deleted += 1
    return deleted


def remove_triangles(graph: EmbeddedGraph) -> int:
    """Delete edge ab of every remaining triangle a < b < c."""
    triangles = sorted(
        (u, v, w)
        for u, v in graph.edges()
        for w in common_neighbors(graph, u, v)
        if w > v
    )
    deleted = 0
    for a, b, c in triangles:
        if graph.has_edge(a, b) and graph.has_edge(b, c) and graph.has_edge(a, c):
            graph.remove_edge(a, b)
            deleted += 1
    return deleted


def is_bridge(graph: EmbeddedGraph, v: int, w: int) -> bool:
    """An edge is a bridge iff both of its darts lie on the same face."""
    boundary = face_walk(graph, (v, w))
    assert boundary is not None
    return (w, v) in boundary


def cap_max_degree(graph: EmbeddedGraph, cap: int) -> list[int]:
    """Delete non-bridge edges at vertices of degree > ``cap``.

    Each over-cap vertex drops its edge to the highest-degree neighbor
    (smallest id on ties) that is not a bridge.

    Returns:
        Vertices left above the cap because every remaining edge is a bridge.
    """
    heap = [v for v in graph.vertices() if graph.degree(v) > cap]
    heapq.heapify(heap)
    stuck: list[int] = []
    while heap:
        v = heapq.heappop(heap)
        while graph.degree(v) > cap:
            order = sorted(graph.neighbor_set(v), key=lambda w: (-graph.degree(w), w))
            target = next((w for w in order if not is_bridge(graph, v, w)), None)
            if target is None:
                stuck.append(v)
                break
            graph.remove_edge(v, target)
    if stuck:
        logger.warning("%d vertices stay above max degree %d (only bridges left)", len(stuck), cap)
    return sorted(stuck)


def _build(spec: GenSpec, seed: int, bias_quarters: int) -> EmbeddedGraph:
    g = stacked_triangulation(spec.n, SplitMix64(seed), bias_quarters)
    deleted = remove_kites(g)
    if spec.triangle_free:
        deleted += remove_triangles(g)
    if spec.max_delta is not None:
        cap_max_degree(g, spec.max_delta)
    logger.debug(
        "Built n=%d seed=%d bias=%d/4: deleted %d edges, max degree %d",
        spec.n,
        seed,
        bias_quarters,
        deleted,
        g.max_degree(),
    )
    return g


def generate_kite_free(spec: GenSpec, max_attempts: int = 4) -> EmbeddedGraph:
    """Connected kite-free plane graph determined by ``spec``.

    Without a degree target a single attempt is made. With one, attempt k
    uses seed ``spec.seed + k`` and hub bias min(k, 3) quarters, stopping at
    the first graph whose maximum degree reaches the target; if none does,
    the attempt with the largest maximum degree is returned.
    """
    target = spec.target_min_delta
    attempts = max_attempts if target > 0 else 1
    best: EmbeddedGraph | None = None
    for k in range(attempts):
        bias = min(k, 3) if target > 0 else 0
        g = _build(spec, (spec.seed + k) & MASK64, bias)
        if best is None or g.max_degree() > best.max_degree():
            best = g
        if g.max_degree() >= target:
            logger.info("Generated n=%d after %d attempts, max degree %d", spec.n, k + 1, g.max_degree())
            return g
    assert best is not None
    logger.warning(
        "Target max degree %d not reached in %d attempts; best was %d",
        target,
        attempts,
        best.max_degree(),
    )
    return best


def random_lists(
    graph: EmbeddedGraph, k: int, palette: int, mode: ColoringMode, seed: int
) -> ListAssignment:
    """Uniform random k-subsets of {0, ..., palette-1} for every element.

    Edges draw first in increasing order, then vertices (total mode).

    Raises:
        InvalidGenSpecError: k is not in 1..palette.
    """
    if k <= 0 or k > palette:
        raise InvalidGenSpecError(
            f"list size {k} must be between 1 and the palette size {palette}",
            context={"k": k, "palette": palette},
        )
    rng = SplitMix64(seed)
    lists = ListAssignment(mode)
    for e in graph.edges():
        lists.edge_lists[e] = tuple(rng.sample(palette, k))
    if mode is ColoringMode.TOTAL:
        for v in graph.vertices():
            lists.vertex_lists[v] = tuple(rng.sample(palette, k))
    return lists
