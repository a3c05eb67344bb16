"""Tests for configuration finders, dispatch and configuration checks."""

import pytest
from hypothesis import given

from src.core.domain import (
    EmbeddedGraph,
    FinderMode,
    LightEdge,
    LightFourFace,
    StructureTheorem,
    SurfaceTag,
    TripleTriangleCenter,
    TwoAltCycle,
)
from src.core.domain.exceptions import ConfigurationNotFoundError, PreconditionViolatedError
from src.core.services.structure import (
    SnapshotFinder,
    alternating_cycle_among,
    check_configuration,
    dispatch,
    find_for_theorem,
    find_light_edge,
    find_light_four_face,
    find_reducible,
    find_triple_triangle_center,
    find_two_alternating_cycle,
    low_endpoint_order,
    match_triple_triangle,
    triangular_faces_at,
)
from tests.strategies import PROPERTY_SETTINGS, kite_free_graphs

pytestmark = pytest.mark.unit

TRIPLE = TripleTriangleCenter(
    center=0,
    triangle1=(0, 6, 1),
    triangle2=(0, 2, 3),
    triangle3=(0, 4, 5),
    pendant_edge=(1, 7),
)


class EmptySource(SnapshotFinder):
    """Finder that never finds anything."""

    def light_edge(self, sum_bound, max_low_degree):
        return None

    def light_four_face(self):
        return None

    def triple_triangle_center(self):
        return None

    def two_alternating_cycle(self):
        return None


class TestLightEdge:
    def test_low_endpoint_order(self, star9, cube):
        assert low_endpoint_order(star9, 0, 4) == (4, 0)
        assert low_endpoint_order(cube, 5, 1) == (1, 5)

    def test_minimizes_sum_then_ids(self, windmill5):
        assert find_light_edge(windmill5, 11, 4) == LightEdge(1, 2, 2, 2)

    def test_respects_bounds(self, cube, star9):
        assert find_light_edge(cube, 5, 4) is None
        assert find_light_edge(cube, 6, 3) == LightEdge(0, 1, 3, 3)
        assert find_light_edge(star9, 9, 4) is None
        assert find_light_edge(star9, 10, 1) == LightEdge(1, 0, 1, 9)


class TestFourFaces:
    def test_cube(self, cube):
        assert find_light_four_face(cube) == LightFourFace(0, 1, 5, 4)

    def test_k23(self, k23):
        found = find_light_four_face(k23)
        assert found == LightFourFace(0, 2, 1, 4)
        assert check_configuration(k23, found) == []

    def test_no_four_face(self, windmill5):
        assert find_light_four_face(windmill5) is None


class TestTripleTriangle:
    def test_triangular_faces(self, triple_triangle_graph):
        assert triangular_faces_at(triple_triangle_graph, 0) == [(1, 6), (3, 2), (5, 4)]

    def test_match(self, triple_triangle_graph):
        assert match_triple_triangle(triple_triangle_graph, 0) == TRIPLE
        assert find_triple_triangle_center(triple_triangle_graph) == TRIPLE
        assert check_configuration(triple_triangle_graph, TRIPLE) == []
        assert len(TRIPLE.edges()) == 10

    def test_not_a_center(self, triple_triangle_graph):
        assert match_triple_triangle(triple_triangle_graph, 2) is None
        triple_triangle_graph.remove_edge(0, 3)
        assert match_triple_triangle(triple_triangle_graph, 0) is None

    def test_delta6_prefers_light_edges(self, triple_triangle_graph):
        found = find_for_theorem(triple_triangle_graph, StructureTheorem.L5)
        assert isinstance(found, LightEdge)
        assert found.degree_sum <= 8


class TestAlternatingCycle:
    def test_k23(self, k23):
        assert find_two_alternating_cycle(k23) == TwoAltCycle((0, 2, 1, 3))

    def test_candidates_restrict_search(self, k23):
        assert alternating_cycle_among(k23, [2]) is None
        assert alternating_cycle_among(k23, [3, 4]) == TwoAltCycle((0, 3, 1, 4))

    def test_none_in_windmill(self, windmill5):
        # every 2-vertex has a 2-vertex neighbor
        assert find_two_alternating_cycle(windmill5) is None


class TestDispatch:
    def test_star_edge_delta(self, star9):
        found = find_reducible(star9, FinderMode.EDGE_D, 9)
        assert found == LightEdge(1, 0, 1, 9)

    def test_delta_mismatch(self, star9):
        with pytest.raises(PreconditionViolatedError):
            find_reducible(star9, FinderMode.EDGE_D1, 8)

    def test_negative_euler_rejected(self):
        # rotation(i) = i+1, i+2, i+3, i+4 traces only three faces: V - E + F = -2
        k5 = EmbeddedGraph.from_rotations(
            [[(i + k) % 5 for k in (1, 2, 3, 4)] for i in range(5)], SurfaceTag.ANY
        )
        with pytest.raises(PreconditionViolatedError):
            find_reducible(k5, FinderMode.EDGE_D1, 4)

    def test_not_found_carries_audit(self, cube):
        with pytest.raises(ConfigurationNotFoundError) as exc_info:
            dispatch(EmptySource(cube), FinderMode.EDGE_D1, 3)
        context = exc_info.value.extra_context
        assert context["mode"] == "edge_d1"
        assert context["max_degree"] == 3
        assert context["audit"]["ruleset"] == "L6_D5"
        assert context["audit"]["total"] == "-8"

    def test_zero_surface_row(self, cube):
        found = dispatch(SnapshotFinder(cube), FinderMode.EDGE_D1, 3, zero_surface=True)
        assert found == LightEdge(0, 1, 3, 3)

    def test_total_row(self, windmill5):
        found = find_reducible(windmill5, FinderMode.TOTAL_D2, 10)
        assert found == LightEdge(1, 2, 2, 2)


class TestTheorems:
    def test_t4_needs_high_degree(self, cube):
        assert find_for_theorem(cube, StructureTheorem.T4) is None

    def test_t7_alternating_cycle(self, k23):
        found = find_for_theorem(k23, StructureTheorem.T7)
        # every edge has degree sum 5 > d + 1
        assert found == TwoAltCycle((0, 2, 1, 3))

    def test_l6_and_l7(self, cube):
        assert find_for_theorem(cube, StructureTheorem.L6) == LightEdge(0, 1, 3, 3)
        assert find_for_theorem(cube, StructureTheorem.L7) == LightEdge(0, 1, 3, 3)


class TestCheckConfiguration:
    def test_stale_light_edge(self, cube):
        cfg = LightEdge(0, 1, 3, 3)
        cube.remove_edge(0, 3)
        assert check_configuration(cube, cfg) == ["recorded degrees differ from the graph"]

    def test_missing_edge(self, cube):
        cfg = LightFourFace(0, 1, 5, 4)
        cube.remove_edge(1, 5)
        assert check_configuration(cube, cfg) == ["edge 1-5 missing"]

    def test_wrong_degrees_on_four_face(self, cube):
        cfg = LightFourFace(1, 5, 4, 0)
        cube.remove_edge(1, 2)
        assert "d(u) and d(w) must both be 3" in check_configuration(cube, cfg)


@PROPERTY_SETTINGS
@given(kite_free_graphs(min_n=4))
def test_dispatch_finds_valid_configurations(graph):
    """On kite-free plane graphs the edge row always answers with a valid configuration."""
    d = graph.max_degree()
    found = find_reducible(graph, FinderMode.EDGE_D1, d)
    assert check_configuration(graph, found) == []
