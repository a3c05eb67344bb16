"""Reducible-configuration finders for kite-free embedded graphs.

The module offers snapshot finders over an ``EmbeddedGraph`` plus the
dispatch table that picks, for each coloring induction, which configuration
to look for. Dispatch works against the ``FinderSource`` protocol so the
incremental peeling index can reuse it unchanged.
"""

import logging
from collections import deque
from collections.abc import Iterable
from typing import Protocol

from ..domain import (
    Configuration,
    EmbeddedGraph,
    FinderMode,
    LightEdge,
    LightFourFace,
    RuleSetId,
    StructureTheorem,
    TripleTriangleCenter,
    TwoAltCycle,
    edge_id,
)
from ..domain.exceptions import ConfigurationNotFoundError, PreconditionViolatedError
from .embedding import euler_characteristic, face_walk

logger = logging.getLogger(__name__)

# Third-triangle degree pairs (other than the center) accepted at a triple-triangle center.
TRIANGLE_663 = (3, 6)
THIRD_TRIANGLE_TYPES = frozenset({(3, 6), (4, 5), (4, 6)})


class FinderSource(Protocol):
    """Anything the dispatch table can query for configurations."""

    graph: EmbeddedGraph

    def max_degree(self) -> int: ...

    def light_edge(self, sum_bound: int, max_low_degree: int) -> LightEdge | None: ...

    def light_four_face(self) -> LightFourFace | None: ...

    def triple_triangle_center(self) -> TripleTriangleCenter | None: ...

    def two_alternating_cycle(self) -> TwoAltCycle | None: ...


def low_endpoint_order(graph: EmbeddedGraph, u: int, v: int) -> tuple[int, int]:
    """(low, high) endpoints of uv: smaller degree first, smaller id on ties."""
    du, dv = graph.degree(u), graph.degree(v)
    if du < dv or (du == dv and u < v):
        return u, v
    return v, u


def find_light_edge(
    graph: EmbeddedGraph, sum_bound: int, max_low_degree: int
) -> LightEdge | None:
    """Edge uv with min(d(u), d(v)) <= max_low_degree and d(u) + d(v) <= sum_bound.

    Among qualifying edges the one minimizing (d(u) + d(v), u, v) is returned,
    with u the low endpoint.
    """
    best: tuple[int, int, int] | None = None
    for a, b in graph.edges():
        u, v = low_endpoint_order(graph, a, b)
        du, dv = graph.degree(u), graph.degree(v)
        if du > max_low_degree or du + dv > sum_bound:
            continue
        key = (du + dv, u, v)
        if best is None or key < best:
            best = key
    if best is None:
        return None
    _, u, v = best
    return LightEdge(u, v, graph.degree(u), graph.degree(v))


def light_four_face_at(graph: EmbeddedGraph, vertex: int) -> LightFourFace | None:
    """A 4-face through ``vertex`` whose opposite corners u, w have degree 3."""
    for neighbor in graph.rotation(vertex):
        boundary = face_walk(graph, (vertex, neighbor), limit=4)
        if boundary is None or len(boundary) != 4:
            continue
        t = [tail for tail, _ in boundary]
        if len(set(t)) != 4:
            continue
        for shift in (0, 1):
            u, v, w, x = t[shift], t[shift + 1], t[(shift + 2) % 4], t[(shift + 3) % 4]
            if graph.degree(u) == 3 and graph.degree(w) == 3:
                return LightFourFace(u, v, w, x)
    return None


def find_light_four_face(graph: EmbeddedGraph) -> LightFourFace | None:
    """First light 4-face found scanning vertices in increasing order."""
    for v in graph.vertices():
        if graph.degree(v) == 3:
            found = light_four_face_at(graph, v)
            if found is not None:
                return found
    return None


def triangular_faces_at(graph: EmbeddedGraph, x: int) -> list[tuple[int, int]]:
    """Pairs (y, z) such that x -> y -> z -> x is a face boundary."""
    triangles: list[tuple[int, int]] = []
    for y in graph.rotation(x):
        z = graph.successor(y, x)
        if z != x and graph.successor(z, y) == x:
            triangles.append((y, z))
    return triangles


def _degree_pair(graph: EmbeddedGraph, y: int, z: int) -> tuple[int, int]:
    dy, dz = graph.degree(y), graph.degree(z)
    return (dy, dz) if dy <= dz else (dz, dy)


def match_triple_triangle(graph: EmbeddedGraph, x: int) -> TripleTriangleCenter | None:
    """Triple-triangle configuration centered at ``x``, if ``x`` is one."""
    if graph.degree(x) != 6:
        return None
    triangles = triangular_faces_at(graph, x)
    if len(triangles) != 3:
        return None

    types = [_degree_pair(graph, y, z) for y, z in triangles]
    picks = [i for i, t in enumerate(types) if t == TRIANGLE_663]
    if len(picks) < 2:
        return None
    first, second = picks[0], picks[1]
    third = next(i for i in range(3) if i not in (first, second))
    if types[third] not in THIRD_TRIANGLE_TYPES:
        return None

    def ordered(i: int) -> tuple[int, int]:
        # (high, low) by degree
        y, z = triangles[i]
        return (z, y) if graph.degree(y) < graph.degree(z) else (y, z)

    f, a = ordered(first)
    b, c = ordered(second)
    d, e = ordered(third)
    pendant = [p for p in graph.neighbor_set(a) if p not in (x, f)]
    if len(pendant) != 1:
        return None
    return TripleTriangleCenter(
        center=x,
        triangle1=(x, f, a),
        triangle2=(x, b, c),
        triangle3=(x, d, e),
        pendant_edge=(a, pendant[0]),
    )


def find_triple_triangle_center(graph: EmbeddedGraph) -> TripleTriangleCenter | None:
    for x in graph.vertices():
        found = match_triple_triangle(graph, x)
        if found is not None:
            return found
    return None


def find_delta6_config(graph: EmbeddedGraph) -> Configuration:
    """Light edge (sum <= 8), light 4-face, or triple-triangle center, in that order.

    Raises:
        ConfigurationNotFoundError: None of the three exists; the L5 audit is attached.
    """
    found: Configuration | None = (
        find_light_edge(graph, 8, 6)
        or find_light_four_face(graph)
        or find_triple_triangle_center(graph)
    )
    if found is None:
        raise _not_found(graph, "delta6", graph.max_degree(), RuleSetId.L5)
    return found


def _forest_path(
    forest: dict[int, list[tuple[int, int]]], start: int, goal: int
) -> tuple[list[int], list[int]]:
    """Vertices and edge labels of the unique forest path from start to goal."""
    previous: dict[int, tuple[int, int]] = {start: (start, -1)}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == goal:
            break
        for u, label in forest.get(v, ()):
            if u not in previous:
                previous[u] = (v, label)
                queue.append(u)
    vertices = [goal]
    labels: list[int] = []
    while vertices[-1] != start:
        parent, label = previous[vertices[-1]]
        labels.append(label)
        vertices.append(parent)
    vertices.reverse()
    labels.reverse()
    return vertices, labels


def alternating_cycle_among(
    graph: EmbeddedGraph, candidates: Iterable[int]
) -> TwoAltCycle | None:
    """2-alternating cycle through the given 2-vertices, if one exists.

    Each 2-vertex whose neighbors both have degree >= 3 becomes an auxiliary
    edge joining those neighbors. The first auxiliary edge that closes a cycle
    (a doubled edge included) is mapped back to the alternating cycle.
    """
    root: dict[int, int] = {}

    def find(a: int) -> int:
        root.setdefault(a, a)
        while root[a] != a:
            root[a] = root[root[a]]
            a = root[a]
        return a

    forest: dict[int, list[tuple[int, int]]] = {}
    for w in sorted(candidates):
        if graph.degree(w) != 2:
            continue
        a, b = sorted(graph.neighbor_set(w))
        if graph.degree(a) < 3 or graph.degree(b) < 3:
            continue
        ra, rb = find(a), find(b)
        if ra == rb:
            vertices, labels = _forest_path(forest, a, b)
            sequence: list[int] = [vertices[0]]
            for label, vertex in zip(labels, vertices[1:], strict=True):
                sequence.extend((label, vertex))
            sequence.append(w)
            return TwoAltCycle(tuple(sequence))
        root[ra] = rb
        forest.setdefault(a, []).append((b, w))
        forest.setdefault(b, []).append((a, w))
    return None


def find_two_alternating_cycle(graph: EmbeddedGraph) -> TwoAltCycle | None:
    return alternating_cycle_among(
        graph, (v for v in graph.vertices() if graph.degree(v) == 2)
    )


class SnapshotFinder:
    """FinderSource over a fixed graph, answering each query by a full scan."""

    def __init__(self, graph: EmbeddedGraph) -> None:
        self.graph = graph

    def max_degree(self) -> int:
        return self.graph.max_degree()

    def light_edge(self, sum_bound: int, max_low_degree: int) -> LightEdge | None:
        return find_light_edge(self.graph, sum_bound, max_low_degree)

    def light_four_face(self) -> LightFourFace | None:
        return find_light_four_face(self.graph)

    def triple_triangle_center(self) -> TripleTriangleCenter | None:
        return find_triple_triangle_center(self.graph)

    def two_alternating_cycle(self) -> TwoAltCycle | None:
        return find_two_alternating_cycle(self.graph)


def dispatch(
    source: FinderSource,
    mode: FinderMode,
    delta_g: int,
    *,
    zero_surface: bool = False,
) -> Configuration:
    """Pick the configuration whose replay step the list sizes of ``mode`` can absorb.

    Args:
        source: Finder over the current subgraph.
        mode: Coloring induction being run.
        delta_g: Maximum degree of the original input graph.
        zero_surface: Some component of the input has Euler characteristic 0;
            the Delta <= 5 edge row then searches degree sum <= 9.

    Raises:
        ConfigurationNotFoundError: The row's configuration does not exist.
    """
    d = source.max_degree()
    found: Configuration | None
    if mode in (FinderMode.EDGE_D, FinderMode.TOTAL_D1) and d >= 9:
        found = source.light_edge(d + 1, 4) or source.two_alternating_cycle()
        ruleset = RuleSetId.T7
    elif mode in (FinderMode.EDGE_D1, FinderMode.EDGE_D):
        if d >= 7:
            found, ruleset = source.light_edge(d + 2, 4), RuleSetId.T4
        elif d == 6 and delta_g == 6:
            found = (
                source.light_edge(8, 6)
                or source.light_four_face()
                or source.triple_triangle_center()
            )
            ruleset = RuleSetId.L5
        elif d == 6:
            found, ruleset = source.light_edge(9, 6), RuleSetId.L5
        elif zero_surface:
            found, ruleset = source.light_edge(9, 6), RuleSetId.L6_D5
        else:
            found, ruleset = source.light_edge(8, 5), RuleSetId.L6_D5
    elif d >= 7:
        found, ruleset = source.light_edge(d + 2, 4), RuleSetId.T4
    else:
        found = source.light_edge(9, 4)
        ruleset = RuleSetId.L5 if d == 6 else RuleSetId.L6_D5

    if found is None:
        raise _not_found(source.graph, mode.value, d, ruleset)
    return found


def find_reducible(graph: EmbeddedGraph, mode: FinderMode, delta_g: int) -> Configuration:
    """Dispatch on a snapshot of ``graph``.

    Raises:
        PreconditionViolatedError: Delta(graph) exceeds ``delta_g`` or a
            component has negative Euler characteristic.
        ConfigurationNotFoundError: No configuration for the dispatch row.
    """
    if graph.max_degree() > delta_g:
        raise PreconditionViolatedError(
            f"max degree {graph.max_degree()} exceeds delta_G={delta_g}",
            context={"max_degree": graph.max_degree(), "delta_g": delta_g},
        )
    euler = euler_characteristic(graph)
    if not euler.nonnegative:
        raise PreconditionViolatedError(
            "a component has negative Euler characteristic",
            context={"per_component": list(euler.per_component)},
        )
    return dispatch(SnapshotFinder(graph), mode, delta_g, zero_surface=euler.has_zero_component)


def find_for_theorem(graph: EmbeddedGraph, theorem: StructureTheorem) -> Configuration | None:
    """Witness the structural statement ``theorem`` on ``graph``."""
    d = graph.max_degree()
    match theorem:
        case StructureTheorem.T4:
            return find_light_edge(graph, d + 2, 4)
        case StructureTheorem.L5:
            return find_delta6_config(graph)
        case StructureTheorem.L6:
            return find_light_edge(graph, 8, 5) if d <= 5 else find_light_edge(graph, 9, 6)
        case StructureTheorem.L7:
            return find_light_edge(graph, 9, 6)
        case StructureTheorem.T7:
            return find_light_edge(graph, d + 1, 4) or find_two_alternating_cycle(graph)


def _is_triangle_face(graph: EmbeddedGraph, x: int, y: int, z: int) -> bool:
    for start in ((x, y), (x, z)):
        if not graph.has_edge(*start):
            return False
        boundary = face_walk(graph, start, limit=3)
        if boundary is not None and len(boundary) == 3:
            if {t for t, _ in boundary} == {x, y, z}:
                return True
    return False


def check_configuration(graph: EmbeddedGraph, cfg: Configuration) -> list[str]:
    """Invariant violations of ``cfg`` against the current ``graph`` (empty when valid)."""
    problems = [
        f"edge {a}-{b} missing" for a, b in cfg.edges() if not graph.has_edge(a, b)
    ]
    if problems:
        return problems

    if isinstance(cfg, LightEdge):
        if (graph.degree(cfg.u), graph.degree(cfg.v)) != (cfg.deg_u, cfg.deg_v):
            problems.append("recorded degrees differ from the graph")
        if cfg.deg_u > cfg.deg_v:
            problems.append("u is not the low endpoint")
    elif isinstance(cfg, LightFourFace):
        if len(set(cfg.cycle)) != 4:
            problems.append("4-face vertices are not distinct")
        boundary = face_walk(graph, (cfg.u, cfg.v), limit=4)
        if boundary is None or tuple(t for t, _ in boundary) != cfg.cycle:
            problems.append("uvwx is not a face boundary")
        if graph.degree(cfg.u) != 3 or graph.degree(cfg.w) != 3:
            problems.append("d(u) and d(w) must both be 3")
    elif isinstance(cfg, TripleTriangleCenter):
        x = cfg.center
        if graph.degree(x) != 6:
            problems.append("center degree is not 6")
        types = []
        for triangle in (cfg.triangle1, cfg.triangle2, cfg.triangle3):
            if triangle[0] != x or not _is_triangle_face(graph, *triangle):
                problems.append(f"{triangle} is not a triangular face at the center")
            types.append(_degree_pair(graph, triangle[1], triangle[2]))
        if types[0] != TRIANGLE_663 or types[1] != TRIANGLE_663:
            problems.append("first two triangles must be of type (6,6,3)")
        if types[2] not in THIRD_TRIANGLE_TYPES:
            problems.append("third triangle type not allowed")
        a = cfg.triangle1[2]
        if graph.degree(a) != 3 or graph.degree(cfg.triangle2[2]) != 3:
            problems.append("A and C must be 3-vertices")
        pa, pp = cfg.pendant_edge
        triangle_edges = set(cfg.edges()[:9])
        if pa != a or edge_id(pa, pp) in triangle_edges:
            problems.append("pendant edge must leave A outside the triangles")
    else:
        seq = cfg.sequence
        if len(seq) < 4 or len(seq) % 2:
            problems.append("alternating cycle length must be even and at least 4")
        if len(set(seq)) != len(seq):
            problems.append("alternating cycle repeats a vertex")
        if any(graph.degree(w) != 2 for w in cfg.two_vertices):
            problems.append("every w_i must have degree 2")
    return problems


def _not_found(
    graph: EmbeddedGraph, label: str, max_degree: int, ruleset: RuleSetId
) -> ConfigurationNotFoundError:
    from .discharging import audit

    report = audit(graph, ruleset)
    logger.error("No configuration for %s at max degree %d", label, max_degree)
    return ConfigurationNotFoundError(
        f"no reducible configuration for {label} at max degree {max_degree}",
        context={"mode": label, "max_degree": max_degree, "audit": report.summary()},
    )
