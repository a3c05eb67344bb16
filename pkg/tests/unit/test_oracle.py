"""Exhaustive list-coloring oracle."""

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.domain import Coloring, ColoringMode, Guarantee, ListAssignment, OracleBudget
from src.core.domain.exceptions import BudgetExceededError, NoColoringFoundError
from src.core.services.generator import random_lists
from src.core.services.oracle import OracleEngine, brute_force_choose
from src.core.services.verification import verify_coloring
from tests.conftest import cycle_graph
from tests.strategies import PROPERTY_SETTINGS, kite_free_graphs

pytestmark = pytest.mark.unit

BUDGET = OracleBudget()


class TestBruteForce:
    def test_even_cycle_is_two_choosable(self, c4):
        lists = ListAssignment.uniform(c4, 2, ColoringMode.EDGE)
        coloring = brute_force_choose(c4, lists, ColoringMode.EDGE, BUDGET)
        assert coloring is not None
        assert verify_coloring(c4, lists, coloring).ok

    def test_odd_cycle_is_not(self):
        triangle = cycle_graph(3)
        lists = ListAssignment.uniform(triangle, 2, ColoringMode.EDGE)
        assert brute_force_choose(triangle, lists, ColoringMode.EDGE, BUDGET) is None

    def test_total_coloring_of_c4_needs_four_colors(self, c4):
        three = ListAssignment.uniform(c4, 3, ColoringMode.TOTAL)
        assert brute_force_choose(c4, three, ColoringMode.TOTAL, BUDGET) is None
        four = ListAssignment.uniform(c4, 4, ColoringMode.TOTAL)
        coloring = brute_force_choose(c4, four, ColoringMode.TOTAL, BUDGET)
        assert coloring is not None
        assert verify_coloring(c4, four, coloring).ok

    def test_fixed_colors_are_kept(self, c4):
        lists = ListAssignment.uniform(c4, 3, ColoringMode.EDGE)
        lists.edge_lists = {e: (1, 2) for e in c4.edges()}
        fixed = Coloring(ColoringMode.EDGE, {(0, 1): 2})
        coloring = brute_force_choose(c4, lists, ColoringMode.EDGE, BUDGET, fixed=fixed)
        assert coloring.edge_color == {(0, 1): 2, (0, 3): 1, (1, 2): 1, (2, 3): 2}

    def test_element_budget(self, cube):
        lists = ListAssignment.uniform(cube, 4, ColoringMode.EDGE)
        with pytest.raises(BudgetExceededError) as exc_info:
            brute_force_choose(cube, lists, ColoringMode.EDGE, OracleBudget(max_elements=5))
        assert exc_info.value.extra_context["elements"] == 12

    def test_node_budget(self, c4):
        lists = ListAssignment.uniform(c4, 2, ColoringMode.EDGE)
        with pytest.raises(BudgetExceededError):
            brute_force_choose(c4, lists, ColoringMode.EDGE, OracleBudget(max_nodes=1))


class TestOracleEngine:
    def test_raises_when_no_coloring(self):
        triangle = cycle_graph(3)
        lists = ListAssignment.uniform(triangle, 2, ColoringMode.EDGE)
        with pytest.raises(NoColoringFoundError):
            OracleEngine().color(triangle, lists, Guarantee.DELTA_PLUS_1)

    def test_name(self):
        assert OracleEngine.name == "oracle"


@PROPERTY_SETTINGS
@given(kite_free_graphs(max_n=9), st.integers(min_value=0, max_value=1000))
def test_uniform_lists_match_chromatic_index(graph, seed):
    """With lists {0..k-1} the oracle succeeds iff k colors suffice, checked via networkx."""
    line = nx.line_graph(nx.Graph(graph.edges()))
    greedy = max(nx.greedy_color(line).values(), default=-1) + 1
    lists = ListAssignment.uniform(graph, greedy, ColoringMode.EDGE)
    coloring = brute_force_choose(graph, lists, ColoringMode.EDGE, OracleBudget(max_elements=40))
    assert coloring is not None
    assert verify_coloring(graph, lists, coloring).ok

    k = graph.max_degree() + 1
    lists = random_lists(graph, k, k + 2, ColoringMode.EDGE, seed)
    coloring = brute_force_choose(graph, lists, ColoringMode.EDGE, OracleBudget(max_elements=40))
    if coloring is not None:
        assert verify_coloring(graph, lists, coloring).ok
