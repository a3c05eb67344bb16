"""Extension steps that color a removed configuration back in.

Two routines live here: list edge coloring of an even cycle from lists of
size at least 2, and the fixed-order procedure for the ten edges around a
triple-triangle center.
"""

import logging
from collections.abc import Collection, Mapping, Sequence

from ..domain import Coloring, EdgeId, ListAssignment, TripleTriangleCenter, edge_id, format_edge
from ..domain.exceptions import (
    AvailabilityBelowBoundError,
    ExtensionFailureError,
    ListTooSmallError,
    OddCycleError,
    ValidationError,
)

logger = logging.getLogger(__name__)

# Lower bounds on available colors per label when every list has size >= 7.
TRIPLE_TRIANGLE_BOUNDS: dict[str, int] = {
    "a": 3,
    "b": 2,
    "c": 6,
    "d": 3,
    "e": 1,
    "f": 5,
    "g": 3,
    "h": 3,
    "i": 7,
    "j": 2,
}

GREEDY_ORDER = ("e", "d", "a", "b", "f", "c", "i", "h")


def color_even_cycle(
    edges: Sequence[EdgeId], avail: Mapping[EdgeId, Collection[int]]
) -> dict[EdgeId, int]:
    """Properly color a cyclically ordered even cycle from 2-lists.

    If every list is the same, the two smallest colors alternate. Otherwise
    some e_i has a color c missing from the list of e_{i+1}: e_i takes c, the
    edges e_{i-1}, ..., e_{i+2} are colored backwards avoiding their already
    colored successor, and e_{i+1} goes last with c never among its options.

    Args:
        edges: Cycle edges in cyclic order; consecutive edges share a vertex.
        avail: Available colors per edge.

    Returns:
        A color for every cycle edge; consecutive edges differ.

    Raises:
        OddCycleError: The cycle has odd length.
        ValidationError: The cycle has fewer than 4 edges.
        ListTooSmallError: Some edge has fewer than 2 available colors.
    """
    k = len(edges)
    if k % 2:
        raise OddCycleError(f"cycle of odd length {k} is not 2-choosable", context={"length": k})
    if k < 4:
        raise ValidationError(f"even cycle needs at least 4 edges, got {k}", context={"length": k})

    lists = [sorted(set(avail[e])) for e in edges]
    short = [format_edge(e) for e, lst in zip(edges, lists, strict=True) if len(lst) < 2]
    if short:
        raise ListTooSmallError(
            "every cycle edge needs at least 2 available colors",
            context={"edges": short},
        )

    if all(lst == lists[0] for lst in lists):
        c0, c1 = lists[0][0], lists[0][1]
        return {e: (c0 if index % 2 == 0 else c1) for index, e in enumerate(edges)}

    start = next(
        index for index in range(k) if set(lists[index]) - set(lists[(index + 1) % k])
    )
    colors: list[int | None] = [None] * k
    colors[start] = min(set(lists[start]) - set(lists[(start + 1) % k]))
    for step in range(1, k - 1):
        index = (start - step) % k
        blocked = colors[(index + 1) % k]
        colors[index] = next(c for c in lists[index] if c != blocked)
    last = (start + 1) % k
    blocked_last = {colors[start], colors[(last + 1) % k]}
    colors[last] = next(c for c in lists[last] if c not in blocked_last)
    return {e: c for e, c in zip(edges, colors, strict=True) if c is not None}


def label_triple_triangle(cfg: TripleTriangleCenter) -> dict[str, EdgeId]:
    """Map labels a..j onto the ten edges of the configuration.

    a=XB, b=BC, c=XC, d=XD, e=DE, f=XE, g=XF, h=FA, i=XA, j=AP.
    """
    x, f, a = cfg.triangle1
    _, b, c = cfg.triangle2
    _, d, e = cfg.triangle3
    p = cfg.pendant_edge[1]
    return {
        "a": edge_id(x, b),
        "b": edge_id(b, c),
        "c": edge_id(x, c),
        "d": edge_id(x, d),
        "e": edge_id(d, e),
        "f": edge_id(x, e),
        "g": edge_id(x, f),
        "h": edge_id(f, a),
        "i": edge_id(x, a),
        "j": edge_id(a, p),
    }


def _colors_at_from(coloring: Coloring) -> dict[int, set[int]]:
    colors_at: dict[int, set[int]] = {}
    for (u, v), color in coloring.edge_color.items():
        colors_at.setdefault(u, set()).add(color)
        colors_at.setdefault(v, set()).add(color)
    return colors_at


def triple_triangle_colors(
    cfg: TripleTriangleCenter,
    lists: ListAssignment,
    colors_at: Mapping[int, Collection[int]],
) -> dict[EdgeId, int]:
    """Colors for the ten edges around a triple-triangle center.

    Available colors are the list minus colors already at either endpoint.
    Edges g and j share a color when their availabilities meet; otherwise one
    of them takes a color h cannot use. The rest follow in the order
    e, d, a, b, f, c, i, h, each taking its smallest free color.

    Raises:
        AvailabilityBelowBoundError: A label has fewer available colors than its bound.
        ExtensionFailureError: A greedy step found no free color.
    """
    labels = label_triple_triangle(cfg)
    avail: dict[str, list[int]] = {}
    for label, (u, v) in labels.items():
        taken = set(colors_at.get(u, ())) | set(colors_at.get(v, ()))
        avail[label] = [c for c in lists.edge_list(u, v) if c not in taken]
        if len(avail[label]) < TRIPLE_TRIANGLE_BOUNDS[label]:
            raise AvailabilityBelowBoundError(
                f"edge {label} has {len(avail[label])} available colors, "
                f"expected at least {TRIPLE_TRIANGLE_BOUNDS[label]}",
                context={
                    "label": label,
                    "edge": format_edge(labels[label]),
                    "available": avail[label],
                    "center": cfg.center,
                },
            )

    chosen: dict[str, int] = {}
    g_avail, j_avail, h_avail = set(avail["g"]), set(avail["j"]), set(avail["h"])
    shared = g_avail & j_avail
    outside_h = (g_avail | j_avail) - h_avail
    if shared:
        chosen["g"] = chosen["j"] = min(shared)
    elif outside_h:
        alpha = min(outside_h)
        if alpha in g_avail:
            chosen["g"], chosen["j"] = alpha, avail["j"][0]
        else:
            chosen["g"], chosen["j"] = avail["g"][0], alpha
    else:
        chosen["g"], chosen["j"] = avail["g"][0], avail["j"][0]

    for label in GREEDY_ORDER:
        ends = set(labels[label])
        blocked = {color for other, color in chosen.items() if ends & set(labels[other])}
        options = [c for c in avail[label] if c not in blocked]
        if not options:
            raise ExtensionFailureError(
                f"no color left for edge {label} at center {cfg.center}",
                context={"label": label, "available": avail[label], "blocked": sorted(blocked)},
            )
        chosen[label] = options[0]

    logger.debug("Triple-triangle at %d colored: %s", cfg.center, chosen)
    return {labels[label]: color for label, color in chosen.items()}


def extend_triple_triangle(
    partial: Coloring,
    cfg: TripleTriangleCenter,
    lists: ListAssignment,
    *,
    colors_at: Mapping[int, Collection[int]] | None = None,
) -> Coloring:
    """Extend ``partial`` to the ten uncolored edges around a triple-triangle center.

    Args:
        partial: Edge coloring of every other edge.
        cfg: The configuration; its ten edges must be uncolored.
        lists: Edge lists.
        colors_at: Colors already on edges at each vertex; computed from
            ``partial`` when omitted.

    Returns:
        A new Coloring holding ``partial`` plus the ten edges.

    Raises:
        ValidationError: One of the ten edges is already colored.
        AvailabilityBelowBoundError: A label has fewer available colors than its bound.
        ExtensionFailureError: A greedy step found no free color.
    """
    already = [
        format_edge(e) for e in label_triple_triangle(cfg).values() if e in partial.edge_color
    ]
    if already:
        raise ValidationError(
            "triple-triangle edges must be uncolored before extension",
            context={"edges": already},
        )
    at = _colors_at_from(partial) if colors_at is None else colors_at
    result = Coloring(partial.mode, dict(partial.edge_color), dict(partial.vertex_color))
    result.edge_color.update(triple_triangle_colors(cfg, lists, at))
    return result
