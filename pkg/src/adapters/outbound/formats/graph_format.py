"""Graph file codec.

    # comment
    surface plane|any
    vertices <n>
    rot <v>: <u1> <u2> ...

Rotations list neighbors in clockwise order. Vertices without a ``rot`` line
are isolated. ``surface`` defaults to plane.
"""

import logging
import re
from pathlib import Path

from ....core.domain import EmbeddedGraph, SurfaceTag
from ....core.domain.exceptions import GraphFormatError
from ....core.services.embedding import validate_embedding

logger = logging.getLogger(__name__)

ROT_LINE = re.compile(r"^rot\s+(\d+)\s*:(.*)$")


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _ints(chunk: str, number: int) -> list[int]:
    try:
        return [int(token) for token in chunk.split()]
    except ValueError as e:
        raise GraphFormatError(
            f"line {number}: expected integers, got {chunk.strip()!r}",
            cause=e,
            context={"line": number},
        ) from e


def parse_graph(text: str) -> EmbeddedGraph:
    """Parse the graph file format.

    Raises:
        GraphFormatError: Malformed line, missing ``vertices``, a vertex out
            of range, or a repeated ``rot`` line.
        InvalidEdgeError: Loop, parallel edge or unknown neighbor.
        AsymmetricRotationError: A neighbor relation is one-sided.
    """
    surface = SurfaceTag.PLANE
    n: int | None = None
    rotations: dict[int, list[int]] = {}

    for number, line in _content_lines(text):
        keyword = line.split()[0]
        if keyword == "surface":
            value = line.split()[1:]
            if len(value) != 1 or value[0] not in {tag.value for tag in SurfaceTag}:
                raise GraphFormatError(
                    f"line {number}: surface must be 'plane' or 'any'", context={"line": number}
                )
            surface = SurfaceTag(value[0])
        elif keyword == "vertices":
            values = _ints(line[len("vertices") :], number)
            if len(values) != 1 or values[0] < 0:
                raise GraphFormatError(
                    f"line {number}: expected 'vertices <n>'", context={"line": number}
                )
            n = values[0]
        elif match := ROT_LINE.match(line):
            if n is None:
                raise GraphFormatError(
                    f"line {number}: 'rot' before 'vertices'", context={"line": number}
                )
            v = int(match.group(1))
            if v >= n:
                raise GraphFormatError(
                    f"line {number}: vertex {v} out of range 0..{n - 1}",
                    context={"line": number, "vertex": v},
                )
            if v in rotations:
                raise GraphFormatError(
                    f"line {number}: second rotation for vertex {v}",
                    context={"line": number, "vertex": v},
                )
            rotations[v] = _ints(match.group(2), number)
        else:
            raise GraphFormatError(
                f"line {number}: unrecognized line {line!r}", context={"line": number}
            )

    if n is None:
        raise GraphFormatError("missing 'vertices <n>' line")
    graph = EmbeddedGraph.from_rotations([rotations.get(v, []) for v in range(n)], surface)
    logger.debug("Parsed graph: n=%d, %d edges, surface=%s", n, graph.edge_count, surface.value)
    return graph


def format_graph(graph: EmbeddedGraph) -> str:
    """Serialize ``graph``; every rotation starts at its smallest neighbor."""
    lines = [f"surface {graph.surface.value}", f"vertices {graph.n}"]
    for v in graph.vertices():
        rotation = " ".join(str(u) for u in graph.rotation(v))
        lines.append(f"rot {v}: {rotation}".rstrip())
    return "\n".join(lines) + "\n"


def load_graph(path: Path) -> EmbeddedGraph:
    """Read, parse and validate a graph file.

    Raises:
        EulerCheckError: A plane-tagged graph has a component with V - E + F != 2.
    """
    graph = parse_graph(path.read_text(encoding="utf-8"))
    validate_embedding(graph)
    return graph
