"""Exact list coloring by backtracking.

Used as the edge-mode base case, as the small-degree fallback, and as an
independent ground truth in tests. Elements are edges ``(u, v)`` and, in
total mode, vertices ``(v,)``.
"""

import logging

from ..domain import (
    Coloring,
    ColoringMode,
    EmbeddedGraph,
    Guarantee,
    ListAssignment,
    OracleBudget,
)
from ..domain.exceptions import BudgetExceededError, NoColoringFoundError
from ..ports import ColoringEnginePort

logger = logging.getLogger(__name__)

Element = tuple[int, ...]


def _conflicts(graph: EmbeddedGraph, mode: ColoringMode) -> dict[Element, list[Element]]:
    """Elements that must receive different colors, per element."""
    total = mode is ColoringMode.TOTAL
    conflicts: dict[Element, list[Element]] = {}
    for u, v in graph.edges():
        near: list[Element] = []
        for end, other in ((u, v), (v, u)):
            near.extend((min(end, w), max(end, w)) for w in graph.neighbor_set(end) if w != other)
            if total:
                near.append((end,))
        conflicts[(u, v)] = near
    if total:
        for v in graph.vertices():
            near = [(min(v, w), max(v, w)) for w in graph.neighbor_set(v)]
            near.extend((w,) for w in graph.neighbor_set(v))
            conflicts[(v,)] = near
    return conflicts


def _list_of(lists: ListAssignment, element: Element) -> tuple[int, ...]:
    if len(element) == 1:
        return lists.vertex_lists[element[0]]
    return lists.edge_lists[(element[0], element[1])]


def brute_force_choose(
    graph: EmbeddedGraph,
    lists: ListAssignment,
    mode: ColoringMode,
    budget: OracleBudget,
    fixed: Coloring | None = None,
) -> Coloring | None:
    """Find a proper list coloring, or prove none exists.

    Elements are ordered fewest-available-colors first (ties by id) and
    colors are tried in increasing order with forward checking.

    Args:
        graph: The graph to color.
        lists: Lists for every element.
        mode: EDGE or TOTAL.
        budget: Caps on free elements and on search nodes.
        fixed: Elements whose colors are already decided; they constrain
            their neighbors and are copied to the result unchanged.

    Returns:
        A coloring covering every element, or None if none exists.

    Raises:
        BudgetExceededError: Too many free elements, or the node cap was hit.
    """
    conflicts = _conflicts(graph, mode)
    preset: dict[Element, int] = {}
    if fixed is not None:
        preset.update(fixed.edge_color)
        if mode is ColoringMode.TOTAL:
            preset.update({(v,): c for v, c in fixed.vertex_color.items()})

    free = sorted(e for e in conflicts if e not in preset)
    if len(free) > budget.max_elements:
        raise BudgetExceededError(
            f"{len(free)} elements to color exceeds the oracle limit of {budget.max_elements}",
            context={"elements": len(free), "max_elements": budget.max_elements},
        )

    domains: dict[Element, set[int]] = {}
    for element in free:
        taken = {preset[other] for other in conflicts[element] if other in preset}
        domains[element] = set(_list_of(lists, element)) - taken

    assignment: dict[Element, int] = {}
    nodes = 0

    def search() -> bool:
        nonlocal nodes
        open_elements = [e for e in free if e not in assignment]
        if not open_elements:
            return True
        element = min(open_elements, key=lambda e: (len(domains[e]), e))
        for color in sorted(domains[element]):
            nodes += 1
            if nodes > budget.max_nodes:
                raise BudgetExceededError(
                    f"oracle search exceeded {budget.max_nodes} nodes",
                    context={"max_nodes": budget.max_nodes, "elements": len(free)},
                )
            assignment[element] = color
            pruned: list[Element] = []
            dead_end = False
            for other in conflicts[element]:
                if other in domains and other not in assignment and color in domains[other]:
                    domains[other].discard(color)
                    pruned.append(other)
                    if not domains[other]:
                        dead_end = True
            if not dead_end and search():
                return True
            for other in pruned:
                domains[other].add(color)
            del assignment[element]
        return False

    if not search():
        logger.debug("Oracle: no coloring exists (%d nodes)", nodes)
        return None
    logger.debug("Oracle: coloring found after %d nodes", nodes)

    coloring = Coloring(mode)
    for element, color in {**preset, **assignment}.items():
        if len(element) == 1:
            coloring.vertex_color[element[0]] = color
        else:
            coloring.edge_color[(element[0], element[1])] = color
    return coloring


class OracleEngine(ColoringEnginePort):
    """Coloring engine that runs the exhaustive search on the whole instance."""

    name = "oracle"

    def __init__(self, budget: OracleBudget | None = None) -> None:
        self.budget = budget or OracleBudget()

    def color(
        self,
        graph: EmbeddedGraph,
        lists: ListAssignment,
        guarantee: Guarantee,
    ) -> Coloring:
        """Run the oracle; ``guarantee`` only labels the request.

        Raises:
            BudgetExceededError: The instance is too large for the budget.
            NoColoringFoundError: The lists admit no proper coloring.
        """
        result = brute_force_choose(graph, lists, lists.mode, self.budget)
        if result is None:
            raise NoColoringFoundError(
                "no proper coloring exists from the given lists",
                context={"mode": lists.mode.value, "guarantee": guarantee.value},
            )
        return result
