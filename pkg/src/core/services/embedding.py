"""Embedding operations: face tracing, Euler characteristic, edge deletion, kites."""

import logging
from collections import deque

from ..domain import (
    Dart,
    EdgeId,
    EmbeddedGraph,
    EulerReport,
    Face,
    GraphStats,
    Kite,
    SurfaceTag,
)
from ..domain.exceptions import EulerCheckError

logger = logging.getLogger(__name__)


def next_dart(graph: EmbeddedGraph, dart: Dart) -> Dart:
    """Dart following ``dart`` along its face."""
    u, v = dart
    return (v, graph.successor(v, u))


def face_walk(graph: EmbeddedGraph, start: Dart, limit: int | None = None) -> list[Dart] | None:
    """Boundary of the face containing ``start``, beginning at ``start``.

    Args:
        graph: The embedding.
        start: Any dart of the face.
        limit: Stop and return None once the walk exceeds this many darts.

    Returns:
        The boundary darts, or None when the face is longer than ``limit``.
    """
    boundary = [start]
    dart = next_dart(graph, start)
    while dart != start:
        boundary.append(dart)
        if limit is not None and len(boundary) > limit:
            return None
        dart = next_dart(graph, dart)
    return boundary


def trace_faces(graph: EmbeddedGraph) -> list[Face]:
    """Partition the darts of ``graph`` into faces.

    Faces are numbered in discovery order: vertices ascending, each vertex's
    darts in rotation order. Isolated vertices contribute no face.
    """
    seen: set[Dart] = set()
    faces: list[Face] = []
    for dart in graph.darts():
        if dart in seen:
            continue
        boundary = face_walk(graph, dart)
        assert boundary is not None
        seen.update(boundary)
        faces.append(Face(id=len(faces), boundary=tuple(boundary)))
    return faces


def connected_components(graph: EmbeddedGraph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    component_of = [-1] * graph.n
    components: list[list[int]] = []
    for root in graph.vertices():
        if component_of[root] >= 0:
            continue
        index = len(components)
        component_of[root] = index
        members = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in graph.neighbor_set(v):
                if component_of[u] < 0:
                    component_of[u] = index
                    members.append(u)
                    queue.append(u)
        components.append(sorted(members))
    return components


def component_euler_characteristics(
    graph: EmbeddedGraph, faces: list[Face] | None = None
) -> list[int]:
    """V_i - E_i + F_i for every component; an isolated vertex counts one face."""
    faces = trace_faces(graph) if faces is None else faces
    components = connected_components(graph)
    component_of: dict[int, int] = {}
    for index, members in enumerate(components):
        for v in members:
            component_of[v] = index

    face_count = [0] * len(components)
    for face in faces:
        face_count[component_of[face.boundary[0][0]]] += 1

    values: list[int] = []
    for index, members in enumerate(components):
        edges = sum(graph.degree(v) for v in members) // 2
        faces_i = face_count[index] if edges else 1
        values.append(len(members) - edges + faces_i)
    return values


def euler_characteristic(graph: EmbeddedGraph, faces: list[Face] | None = None) -> EulerReport:
    """Euler characteristic with per-component detail.

    For a disconnected input the value merges the outer faces of the
    components (a plane graph with c components reports 1 + c) and a warning
    is logged.
    """
    per_component = component_euler_characteristics(graph, faces)
    components = len(per_component)
    value = sum(per_component) - max(components - 1, 0)
    if components > 1:
        logger.warning(
            "Euler characteristic requested for a disconnected graph (%d components)",
            components,
        )
    return EulerReport(value=value, components=components, per_component=tuple(per_component))


def validate_embedding(graph: EmbeddedGraph) -> None:
    """Check the surface declaration of ``graph``.

    Raises:
        EulerCheckError: The graph is tagged plane but some component has
            V_i - E_i + F_i != 2.
    """
    if graph.surface is not SurfaceTag.PLANE:
        return
    for index, chi in enumerate(component_euler_characteristics(graph)):
        if chi != 2:
            raise EulerCheckError(
                f"component {index} has Euler characteristic {chi}, expected 2 for a plane graph",
                context={"component": index, "euler": chi},
            )


def delete_edge(graph: EmbeddedGraph, e: EdgeId) -> EmbeddedGraph:
    """Return a copy of ``graph`` without edge ``e``.

    Raises:
        UnknownEdgeError: ``e`` is not an edge of ``graph``.
    """
    result = graph.copy()
    result.remove_edge(*e)
    return result


def common_neighbors(graph: EmbeddedGraph, u: int, v: int) -> list[int]:
    """Sorted common neighbors of u and v."""
    small, large = (u, v) if graph.degree(u) <= graph.degree(v) else (v, u)
    other = graph.neighbor_set(large)
    return sorted(w for w in graph.neighbor_set(small) if w in other)


def find_kites(graph: EmbeddedGraph) -> list[Kite]:
    """Every kite: one per edge and unordered pair of common neighbors."""
    kites: list[Kite] = []
    for u, v in graph.edges():
        apexes = common_neighbors(graph, u, v)
        for i, a in enumerate(apexes):
            for b in apexes[i + 1 :]:
                kites.append(Kite(shared_edge=(u, v), apexes=(a, b)))
    return kites


def is_kite_free(graph: EmbeddedGraph) -> bool:
    return all(len(common_neighbors(graph, u, v)) < 2 for u, v in graph.edges())


def graph_stats(graph: EmbeddedGraph) -> GraphStats:
    """n, |E|, |F|, max and min degree, kite count and Euler characteristic."""
    faces = trace_faces(graph)
    return GraphStats(
        n=graph.n,
        edges=graph.edge_count,
        faces=len(faces),
        max_degree=graph.max_degree(),
        min_degree=graph.min_degree(),
        kites=len(find_kites(graph)),
        euler=euler_characteristic(graph, faces),
    )
