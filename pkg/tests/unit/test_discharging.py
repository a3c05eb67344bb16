"""Discharging audits with exact charges."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.domain import RuleSetId
from src.core.services.discharging import apply_rules, audit, initial_charges
from src.core.services.embedding import trace_faces
from tests.strategies import PROPERTY_SETTINGS, kite_free_graphs

pytestmark = pytest.mark.unit


class TestInitialCharges:
    def test_plane_total_is_minus_eight(self, cube, windmill5):
        for g in (cube, windmill5):
            assert initial_charges(g, RuleSetId.T4).total() == -8

    def test_torus_total_is_zero(self, toroidal_k5):
        assert initial_charges(toroidal_k5, RuleSetId.L5).total() == 0

    def test_bank_only_for_t7(self, cube):
        assert initial_charges(cube, RuleSetId.T4).bank is None
        assert initial_charges(cube, RuleSetId.T7).bank == 0


class TestCube:
    def test_t4_transfers_cancel(self, cube):
        report = audit(cube, RuleSetId.T4)
        assert set(report.final.vertex_charge.values()) == {Fraction(-1)}
        assert set(report.final.face_charge.values()) == {Fraction(0)}
        assert report.total == -8
        assert report.negatives == [f"v {v}" for v in range(8)]
        assert "delta>=7" in report.failed_preconditions
        assert report.conserved


class TestWindmill:
    """Five triangles on a hub of degree 10."""

    def test_t7_charges(self, windmill5):
        report = audit(windmill5, RuleSetId.T7)
        final = report.final
        # hub: 6 - 10/3 to 2-neighbors - 5/2 to triangles - 4/3 to the bank
        assert final.vertex_charge[0] == Fraction(-7, 6)
        # 2-vertex: -2 + 1/3 from the hub + 4/3 from the bank
        assert all(final.vertex_charge[v] == Fraction(-1, 3) for v in range(1, 11))
        faces = trace_faces(windmill5)
        for face in faces:
            expected = Fraction(-1, 2) if face.degree == 3 else Fraction(11)
            assert final.face_charge[face.id] == expected
        assert final.bank == -12
        assert report.total == -8
        assert report.negatives[-1] == "bank"
        assert report.strictly_positive_element_exists

    def test_t7_preconditions(self, windmill5):
        failed = audit(windmill5, RuleSetId.T7).failed_preconditions
        assert failed == [
            "2-vertices adjacent only to delta-vertices",
            "no light edge d(u)<=4 and d(u)+d(v)<=delta+1",
        ]

    def test_l6_feeds_triangles_from_large_vertices(self, windmill5):
        final = apply_rules(windmill5, RuleSetId.L6_D5)
        # hub: 6 - 5/2 to its five triangles
        assert final.vertex_charge[0] == Fraction(7, 2)
        assert final.vertex_charge[1] == -2


class TestL5:
    def test_triple_triangle_graph(self, triple_triangle_graph):
        report = audit(triple_triangle_graph, RuleSetId.L5)
        final = report.final
        # X: 2 - 3 * 1/2 to triangles with a 3- or 4-vertex - 2 * 1/6 to A and C on the outer face
        assert final.vertex_charge[0] == Fraction(1, 6)
        assert report.conserved
        assert report.total == -8
        assert "delta=6" not in report.failed_preconditions
        assert "no edge with d(u)+d(v)<=8" in report.failed_preconditions

    def test_summary_is_compact(self, triple_triangle_graph):
        summary = audit(triple_triangle_graph, RuleSetId.L5).summary()
        assert summary["ruleset"] == "L5"
        assert summary["total"] == "-8"
        assert len(summary["negatives"]) <= 20


@PROPERTY_SETTINGS
@given(kite_free_graphs(), st.sampled_from(list(RuleSetId)))
def test_charge_is_conserved(graph, ruleset):
    report = audit(graph, ruleset)
    assert report.conserved
    assert report.total == 4 * (graph.edge_count - graph.n - len(trace_faces(graph)))
