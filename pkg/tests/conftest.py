"""
Pytest configuration and shared fixtures.

Every embedding below is hand-checked: rotations are consistent and the
plane-tagged ones satisfy V - E + F = 2.
"""

from pathlib import Path

import pytest

from src.adapters.outbound.formats import format_graph
from src.core.domain import EmbeddedGraph, SurfaceTag


def pytest_configure(config):
    """Configure pytest markers."""
    config.addinivalue_line("markers", "unit: Unit tests (pure functions, small fixtures)")
    config.addinivalue_line("markers", "integration: Integration tests (CLI pipelines)")
    config.addinivalue_line("markers", "slow: Slow tests (large generated graphs)")


def cycle_graph(n: int) -> EmbeddedGraph:
    return EmbeddedGraph.from_rotations([[(v - 1) % n, (v + 1) % n] for v in range(n)])


def star_graph(leaves: int) -> EmbeddedGraph:
    """K_{1,leaves}; the center is vertex 0."""
    return EmbeddedGraph.from_rotations([list(range(1, leaves + 1))] + [[0]] * leaves)


def windmill_graph(blades: int) -> EmbeddedGraph:
    """Triangles (0, 2i-1, 2i) sharing the hub 0; kite-free with max degree 2 * blades."""
    rotations = [list(range(1, 2 * blades + 1))]
    for i in range(1, blades + 1):
        rotations.append([0, 2 * i])
        rotations.append([2 * i - 1, 0])
    return EmbeddedGraph.from_rotations(rotations)


@pytest.fixture
def c4() -> EmbeddedGraph:
    return cycle_graph(4)


@pytest.fixture
def k4() -> EmbeddedGraph:
    """Planar K4; every edge is the shared edge of a kite."""
    return EmbeddedGraph.from_rotations([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])


@pytest.fixture
def cube() -> EmbeddedGraph:
    """Q3: outer square 0-1-2-3, inner square 4-5-6-7, spokes i-(i+4)."""
    return EmbeddedGraph.from_rotations(
        [
            [1, 3, 4],
            [0, 5, 2],
            [1, 6, 3],
            [2, 7, 0],
            [5, 0, 7],
            [1, 4, 6],
            [5, 7, 2],
            [6, 4, 3],
        ]
    )


@pytest.fixture
def toroidal_k5() -> EmbeddedGraph:
    """K5 on the torus: rotation(i) = i+1, i+2, i+4, i+3; five 4-faces."""
    return EmbeddedGraph.from_rotations(
        [[(i + k) % 5 for k in (1, 2, 4, 3)] for i in range(5)], SurfaceTag.ANY
    )


@pytest.fixture
def k23() -> EmbeddedGraph:
    """K_{2,3} with sides {0, 1} and {2, 3, 4}."""
    return EmbeddedGraph.from_rotations([[2, 3, 4], [4, 3, 2], [0, 1], [0, 1], [0, 1]])


@pytest.fixture
def k2() -> EmbeddedGraph:
    return EmbeddedGraph.from_rotations([[1], [0]])


@pytest.fixture
def bridged_triangles() -> EmbeddedGraph:
    """Triangles 0-1-2 and 3-4-5 joined by the bridge 2-3."""
    return EmbeddedGraph.from_rotations([[1, 2], [2, 0], [0, 1, 3], [2, 4, 5], [5, 3], [3, 4]])


@pytest.fixture
def star9() -> EmbeddedGraph:
    return star_graph(9)


@pytest.fixture
def windmill5() -> EmbeddedGraph:
    return windmill_graph(5)


@pytest.fixture
def triple_triangle_graph() -> EmbeddedGraph:
    """A 6-vertex X=0 on triangles XFA, XBC, XDE with pendant edge AP, plus leaves.

    Ids: X=0, A=1, B=2, C=3, D=4, E=5, F=6, P=7. Leaves 8..11 hang on F,
    12..15 on B, 16 on C, 17..20 on D, 21..22 on E and 23..27 on P.
    """
    rotations: list[list[int]] = [
        [6, 1, 2, 3, 4, 5],
        [0, 6, 7],
        [0, 12, 13, 14, 15, 3],
        [0, 2, 16],
        [0, 17, 18, 19, 20, 5],
        [0, 4, 21, 22],
        [0, 8, 9, 10, 11, 1],
        [1, 23, 24, 25, 26, 27],
    ]
    parents = [6] * 4 + [2] * 4 + [3] + [4] * 4 + [5] * 2 + [7] * 5
    rotations.extend([parent] for parent in parents)
    return EmbeddedGraph.from_rotations(rotations)


@pytest.fixture
def write_graph(tmp_path: Path):
    """Write a graph to a temp file and return its path."""

    def _write(graph: EmbeddedGraph, name: str = "graph.txt") -> Path:
        path = tmp_path / name
        path.write_text(format_graph(graph), encoding="utf-8")
        return path

    return _write
