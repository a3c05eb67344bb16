"""Exhaustive checking of list colorings."""

import logging
from collections import defaultdict

from ..domain import (
    Coloring,
    ColoringMode,
    EmbeddedGraph,
    ListAssignment,
    VerificationResult,
    Violation,
    ViolationKind,
    format_edge,
)
from ..domain.exceptions import ListFormatError

logger = logging.getLogger(__name__)


def require_lists_cover(graph: EmbeddedGraph, lists: ListAssignment) -> None:
    """Raise ListFormatError if some element of ``graph`` has no list."""
    missing = lists.missing_elements(graph)
    if missing:
        raise ListFormatError(
            f"{len(missing)} elements have no color list",
            context={"missing": missing[:20]},
        )


def verify_coloring(
    graph: EmbeddedGraph, lists: ListAssignment, coloring: Coloring
) -> VerificationResult:
    """Check properness, list membership and coverage; report every violation.

    Args:
        graph: The colored graph.
        lists: The list assignment the coloring must respect.
        coloring: Coloring to check; its mode decides whether vertices count.

    Returns:
        All violations found, in a deterministic order. Never raises for a bad
        coloring.
    """
    result = VerificationResult()
    report = result.violations.append
    total = coloring.mode is ColoringMode.TOTAL

    for e in sorted(coloring.edge_color):
        if not graph.has_edge(*e):
            report(Violation(ViolationKind.UNKNOWN_ELEMENT, (format_edge(e),), coloring.edge_color[e]))
    for v in sorted(coloring.vertex_color):
        if not total or not 0 <= v < graph.n:
            report(Violation(ViolationKind.UNKNOWN_ELEMENT, (str(v),), coloring.vertex_color[v]))

    for e in graph.edges():
        color = coloring.edge_color.get(e)
        if color is None:
            report(Violation(ViolationKind.UNCOLORED, (format_edge(e),)))
        elif color not in lists.edge_lists.get(e, ()):
            report(Violation(ViolationKind.NOT_IN_LIST, (format_edge(e),), color))

    for v in graph.vertices():
        by_color: dict[int, list[str]] = defaultdict(list)
        for w in sorted(graph.neighbor_set(v)):
            color = coloring.color_of(v, w)
            if color is not None:
                by_color[color].append(format_edge((min(v, w), max(v, w))))
        for color, clashing in sorted(by_color.items()):
            for i, first in enumerate(clashing):
                for second in clashing[i + 1 :]:
                    report(Violation(ViolationKind.ADJACENT_EDGES, (first, second), color))

    if total:
        for v in graph.vertices():
            color = coloring.vertex_color.get(v)
            if color is None:
                report(Violation(ViolationKind.UNCOLORED, (str(v),)))
            elif color not in lists.vertex_lists.get(v, ()):
                report(Violation(ViolationKind.NOT_IN_LIST, (str(v),), color))
        for u, v in graph.edges():
            cu, cv = coloring.vertex_color.get(u), coloring.vertex_color.get(v)
            ce = coloring.edge_color.get((u, v))
            if cu is not None and cu == cv:
                report(Violation(ViolationKind.ADJACENT_VERTICES, (str(u), str(v)), cu))
            for end, cend in ((u, cu), (v, cv)):
                if ce is not None and ce == cend:
                    report(
                        Violation(ViolationKind.EDGE_VERTEX, (format_edge((u, v)), str(end)), ce)
                    )

    if result.violations:
        logger.info("Verification found %d violations", len(result.violations))
    return result
