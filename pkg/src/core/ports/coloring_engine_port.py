"""Coloring engine port interface."""

from abc import ABC, abstractmethod

from ..domain import Coloring, EmbeddedGraph, Guarantee, ListAssignment


class ColoringEnginePort(ABC):
    """Abstract interface for list coloring engines.

    The coloring mode (edge or total) is taken from the list assignment.
    """

    name: str

    @abstractmethod
    def color(
        self,
        graph: EmbeddedGraph,
        lists: ListAssignment,
        guarantee: Guarantee,
    ) -> Coloring:
        """Color every element of ``graph`` from ``lists``.

        Args:
            graph: Embedded input graph.
            lists: A list for every element to color.
            guarantee: List-size guarantee the caller relies on.

        Returns:
            A complete proper coloring from the lists.
        """
        ...
