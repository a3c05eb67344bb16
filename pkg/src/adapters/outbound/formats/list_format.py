"""List assignment codec.

    edgelist <u> <v>: <c1> <c2> ...
    vertexlist <v>: <c1> <c2> ...      (total mode only)
"""

import re
from pathlib import Path

from ....core.domain import ColoringMode, ListAssignment, edge_id
from ....core.domain.exceptions import ListFormatError

EDGE_LINE = re.compile(r"^edgelist\s+(\d+)\s+(\d+)\s*:(.*)$")
VERTEX_LINE = re.compile(r"^vertexlist\s+(\d+)\s*:(.*)$")


def _colors(chunk: str, number: int) -> tuple[int, ...]:
    try:
        colors = [int(token) for token in chunk.split()]
    except ValueError as e:
        raise ListFormatError(
            f"line {number}: colors must be integers", cause=e, context={"line": number}
        ) from e
    if any(c < 0 for c in colors) or len(set(colors)) != len(colors):
        raise ListFormatError(
            f"line {number}: colors must be distinct nonnegative integers",
            context={"line": number},
        )
    return tuple(sorted(colors))


def parse_lists(text: str, mode: ColoringMode) -> ListAssignment:
    """Parse a list file for ``mode``.

    Raises:
        ListFormatError: Malformed or repeated line, or a vertex list in edge mode.
    """
    lists = ListAssignment(mode)
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if match := EDGE_LINE.match(line):
            e = edge_id(int(match.group(1)), int(match.group(2)))
            if e in lists.edge_lists:
                raise ListFormatError(
                    f"line {number}: second list for edge {e[0]}-{e[1]}", context={"line": number}
                )
            lists.edge_lists[e] = _colors(match.group(3), number)
        elif match := VERTEX_LINE.match(line):
            if mode is not ColoringMode.TOTAL:
                raise ListFormatError(
                    f"line {number}: vertex lists are only allowed in total mode",
                    context={"line": number},
                )
            v = int(match.group(1))
            if v in lists.vertex_lists:
                raise ListFormatError(
                    f"line {number}: second list for vertex {v}", context={"line": number}
                )
            lists.vertex_lists[v] = _colors(match.group(2), number)
        else:
            raise ListFormatError(
                f"line {number}: unrecognized line {line!r}", context={"line": number}
            )
    return lists


def format_lists(lists: ListAssignment) -> str:
    lines = [
        f"edgelist {u} {v}: {' '.join(map(str, colors))}"
        for (u, v), colors in sorted(lists.edge_lists.items())
    ]
    if lists.mode is ColoringMode.TOTAL:
        lines += [
            f"vertexlist {v}: {' '.join(map(str, colors))}"
            for v, colors in sorted(lists.vertex_lists.items())
        ]
    return "\n".join(lines) + "\n" if lines else ""


def load_lists(path: Path, mode: ColoringMode) -> ListAssignment:
    return parse_lists(path.read_text(encoding="utf-8"), mode)
