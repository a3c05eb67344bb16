"""Coloring verification reports every violation."""

import pytest

from src.core.domain import Coloring, ColoringMode, ListAssignment, Violation, ViolationKind
from src.core.domain.exceptions import ListFormatError
from src.core.services.verification import require_lists_cover, verify_coloring

pytestmark = pytest.mark.unit


def proper_c4() -> Coloring:
    return Coloring(ColoringMode.EDGE, {(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 1})


class TestEdgeMode:
    def test_proper(self, c4):
        lists = ListAssignment.uniform(c4, 2, ColoringMode.EDGE)
        assert verify_coloring(c4, lists, proper_c4()).ok

    def test_adjacent_edges(self, c4):
        lists = ListAssignment.uniform(c4, 2, ColoringMode.EDGE)
        coloring = proper_c4()
        coloring.edge_color[(1, 2)] = 0
        result = verify_coloring(c4, lists, coloring)
        assert result.violations == [
            Violation(ViolationKind.ADJACENT_EDGES, ("0-1", "1-2"), 0),
            Violation(ViolationKind.ADJACENT_EDGES, ("1-2", "2-3"), 0),
        ]

    def test_uncolored_and_not_in_list(self, c4):
        lists = ListAssignment.uniform(c4, 2, ColoringMode.EDGE)
        coloring = proper_c4()
        del coloring.edge_color[(0, 1)]
        coloring.edge_color[(2, 3)] = 5
        kinds = [v.kind for v in verify_coloring(c4, lists, coloring).violations]
        assert kinds == [ViolationKind.UNCOLORED, ViolationKind.NOT_IN_LIST]

    def test_unknown_elements(self, c4):
        lists = ListAssignment.uniform(c4, 2, ColoringMode.EDGE)
        coloring = proper_c4()
        coloring.edge_color[(0, 2)] = 1
        coloring.vertex_color[0] = 1
        violations = verify_coloring(c4, lists, coloring).violations
        assert violations[:2] == [
            Violation(ViolationKind.UNKNOWN_ELEMENT, ("0-2",), 1),
            Violation(ViolationKind.UNKNOWN_ELEMENT, ("0",), 1),
        ]


class TestTotalMode:
    def test_vertex_conflicts(self, c4):
        lists = ListAssignment.uniform(c4, 4, ColoringMode.TOTAL)
        coloring = Coloring(
            ColoringMode.TOTAL,
            {(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 1},
            {0: 2, 1: 2, 2: 3, 3: 3},
        )
        violations = verify_coloring(c4, lists, coloring).violations
        assert Violation(ViolationKind.ADJACENT_VERTICES, ("0", "1"), 2) in violations
        assert Violation(ViolationKind.ADJACENT_VERTICES, ("2", "3"), 3) in violations
        assert len(violations) == 2

    def test_edge_vertex_conflict(self, c4):
        lists = ListAssignment.uniform(c4, 4, ColoringMode.TOTAL)
        coloring = Coloring(
            ColoringMode.TOTAL,
            {(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 1},
            {0: 0, 1: 2, 2: 3, 3: 2},
        )
        violations = verify_coloring(c4, lists, coloring).violations
        assert violations == [Violation(ViolationKind.EDGE_VERTEX, ("0-1", "0"), 0)]

    def test_missing_vertex(self, c4):
        lists = ListAssignment.uniform(c4, 4, ColoringMode.TOTAL)
        coloring = Coloring(ColoringMode.TOTAL, dict(proper_c4().edge_color), {0: 2, 1: 3, 2: 2})
        violations = verify_coloring(c4, lists, coloring).violations
        assert violations == [Violation(ViolationKind.UNCOLORED, ("3",))]


class TestListCover:
    def test_missing_lists(self, c4):
        lists = ListAssignment.uniform(c4, 2, ColoringMode.TOTAL)
        del lists.vertex_lists[3]
        with pytest.raises(ListFormatError) as exc_info:
            require_lists_cover(c4, lists)
        assert exc_info.value.extra_context["missing"] == ["3"]
