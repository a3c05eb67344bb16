"""Even-cycle and triple-triangle extension steps."""

import pytest

from src.core.domain import Coloring, ColoringMode, ListAssignment, TripleTriangleCenter
from src.core.domain.exceptions import (
    AvailabilityBelowBoundError,
    ListTooSmallError,
    OddCycleError,
    ValidationError,
)
from src.core.services.extension import (
    color_even_cycle,
    extend_triple_triangle,
    label_triple_triangle,
    triple_triangle_colors,
)
from src.core.services.verification import verify_coloring

pytestmark = pytest.mark.unit

SQUARE = [(0, 1), (1, 2), (2, 3), (0, 3)]

CENTER = TripleTriangleCenter(
    center=0,
    triangle1=(0, 6, 1),
    triangle2=(0, 2, 3),
    triangle3=(0, 4, 5),
    pendant_edge=(1, 7),
)

# Colors already on the leaf edges at each vertex.
LEAF_COLORS = {
    6: [30, 31, 32, 33],
    2: [10, 11, 12, 13],
    3: [14],
    4: [20, 21, 22, 23],
    5: [24, 25],
    7: [40, 41, 42, 43, 44],
}

BASE_LISTS = {
    "a": [10, 11, 12, 13, 1, 2, 3],
    "b": [10, 11, 12, 13, 14, 1, 2],
    "c": [14, 1, 2, 3, 4, 5, 6],
    "d": [20, 21, 22, 23, 1, 2, 3],
    "e": [20, 21, 22, 23, 24, 25, 1],
    "f": [24, 25, 1, 2, 3, 4, 5],
    "i": [1, 2, 3, 4, 5, 6, 7],
}


def assert_proper_cycle(edges, colors, avail):
    for k, e in enumerate(edges):
        assert colors[e] in avail[e]
        assert colors[e] != colors[edges[(k + 1) % len(edges)]]


def partial_coloring(graph) -> Coloring:
    """Leaf edges colored as in LEAF_COLORS."""
    coloring = Coloring(ColoringMode.EDGE)
    for parent, colors in LEAF_COLORS.items():
        leaves = sorted(w for w in graph.neighbor_set(parent) if graph.degree(w) == 1)
        for leaf, color in zip(leaves, colors, strict=True):
            coloring.edge_color[(min(parent, leaf), max(parent, leaf))] = color
    return coloring


def edge_lists(graph, **by_label) -> ListAssignment:
    labels = label_triple_triangle(CENTER)
    lists = ListAssignment(ColoringMode.EDGE)
    for e in graph.edges():
        lists.edge_lists[e] = tuple(sorted({90, 91, 92, 93, 94, 95} | set(range(10, 45))))
    for label, colors in {**BASE_LISTS, **by_label}.items():
        lists.edge_lists[labels[label]] = tuple(sorted(colors))
    return lists


class TestEvenCycle:
    def test_equal_lists_alternate(self):
        avail = {e: [3, 1, 2] for e in SQUARE}
        colors = color_even_cycle(SQUARE, avail)
        assert [colors[e] for e in SQUARE] == [1, 2, 1, 2]

    def test_distinct_lists(self):
        avail = {(0, 1): [1, 2], (1, 2): [2, 3], (2, 3): [1, 3], (0, 3): [1, 2]}
        colors = color_even_cycle(SQUARE, avail)
        assert_proper_cycle(SQUARE, colors, avail)

    def test_hexagon_with_shifted_lists(self):
        hexagon = [(k, k + 1) for k in range(5)] + [(0, 5)]
        avail = {e: [k % 3, (k + 1) % 3] for k, e in enumerate(hexagon)}
        colors = color_even_cycle(hexagon, avail)
        assert_proper_cycle(hexagon, colors, avail)

    def test_odd_cycle(self):
        triangle = [(0, 1), (1, 2), (0, 2)]
        with pytest.raises(OddCycleError):
            color_even_cycle(triangle, {e: [1, 2] for e in triangle})

    def test_too_short(self):
        with pytest.raises(ValidationError):
            color_even_cycle([(0, 1), (0, 1)], {(0, 1): [1, 2]})

    def test_list_too_small(self):
        avail = {e: [1, 2] for e in SQUARE}
        avail[(2, 3)] = [1]
        with pytest.raises(ListTooSmallError) as exc_info:
            color_even_cycle(SQUARE, avail)
        assert exc_info.value.extra_context == {"edges": ["2-3"]}


class TestTripleTriangle:
    def test_labels(self):
        labels = label_triple_triangle(CENTER)
        assert labels["a"] == (0, 2)
        assert labels["h"] == (1, 6)
        assert labels["j"] == (1, 7)
        assert len(set(labels.values())) == 10

    def test_shared_color_for_g_and_j(self, triple_triangle_graph):
        lists = edge_lists(
            triple_triangle_graph,
            g=[30, 31, 32, 33, 5, 6, 7],
            j=[40, 41, 42, 43, 44, 7, 8],
            h=[30, 31, 32, 33, 5, 6, 8],
        )
        result = extend_triple_triangle(partial_coloring(triple_triangle_graph), CENTER, lists)
        labels = label_triple_triangle(CENTER)
        got = {label: result.edge_color[e] for label, e in labels.items()}
        assert got == {
            "e": 1, "d": 2, "a": 1, "b": 2, "f": 3,
            "c": 4, "i": 5, "h": 6, "g": 7, "j": 7,
        }  # fmt: skip
        assert verify_coloring(triple_triangle_graph, lists, result).ok

    def test_color_outside_h(self, triple_triangle_graph):
        lists = edge_lists(
            triple_triangle_graph,
            g=[30, 31, 32, 33, 5, 6, 7],
            h=[30, 31, 32, 33, 5, 6, 7],
            j=[40, 41, 42, 43, 44, 8, 9],
        )
        labels = label_triple_triangle(CENTER)
        partial = partial_coloring(triple_triangle_graph)
        colors_at: dict[int, set[int]] = {}
        for (u, v), color in partial.edge_color.items():
            colors_at.setdefault(u, set()).add(color)
            colors_at.setdefault(v, set()).add(color)
        added = triple_triangle_colors(CENTER, lists, colors_at)
        assert (added[labels["j"]], added[labels["g"]], added[labels["h"]]) == (8, 5, 7)

    def test_partial_is_not_modified(self, triple_triangle_graph):
        lists = edge_lists(
            triple_triangle_graph,
            g=[30, 31, 32, 33, 5, 6, 7],
            j=[40, 41, 42, 43, 44, 7, 8],
            h=[30, 31, 32, 33, 5, 6, 8],
        )
        partial = partial_coloring(triple_triangle_graph)
        before = dict(partial.edge_color)
        extend_triple_triangle(partial, CENTER, lists)
        assert partial.edge_color == before

    def test_bound_violation(self, triple_triangle_graph):
        lists = edge_lists(
            triple_triangle_graph,
            g=[30, 31, 32, 33, 5, 6, 7],
            j=[40, 41, 42, 43, 44, 7, 8],
            h=[30, 31, 32, 33, 5, 6, 8],
            i=[1, 2, 3, 4, 5, 6],
        )
        with pytest.raises(AvailabilityBelowBoundError) as exc_info:
            extend_triple_triangle(partial_coloring(triple_triangle_graph), CENTER, lists)
        assert exc_info.value.extra_context["label"] == "i"

    def test_rejects_colored_edges(self, triple_triangle_graph):
        partial = partial_coloring(triple_triangle_graph)
        partial.edge_color[(0, 1)] = 1
        with pytest.raises(ValidationError):
            extend_triple_triangle(partial, CENTER, edge_lists(triple_triangle_graph))
