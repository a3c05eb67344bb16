"""Coloring codec.

    edge <u> <v> = <c>
    vertex <v> = <c>

Output is sorted by element id, edges first.
"""

import re
from pathlib import Path

from ....core.domain import Coloring, ColoringMode, VerificationResult, edge_id
from ....core.domain.exceptions import ColoringFormatError

EDGE_LINE = re.compile(r"^edge\s+(\d+)\s+(\d+)\s*=\s*(\d+)$")
VERTEX_LINE = re.compile(r"^vertex\s+(\d+)\s*=\s*(\d+)$")


def parse_coloring(text: str, mode: ColoringMode) -> Coloring:
    """Parse a coloring file.

    Raises:
        ColoringFormatError: Malformed line or an element colored twice.
    """
    coloring = Coloring(mode)
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if match := EDGE_LINE.match(line):
            e = edge_id(int(match.group(1)), int(match.group(2)))
            if e in coloring.edge_color:
                raise ColoringFormatError(
                    f"line {number}: edge {e[0]}-{e[1]} colored twice", context={"line": number}
                )
            coloring.edge_color[e] = int(match.group(3))
        elif match := VERTEX_LINE.match(line):
            v = int(match.group(1))
            if v in coloring.vertex_color:
                raise ColoringFormatError(
                    f"line {number}: vertex {v} colored twice", context={"line": number}
                )
            coloring.vertex_color[v] = int(match.group(2))
        else:
            raise ColoringFormatError(
                f"line {number}: unrecognized line {line!r}", context={"line": number}
            )
    return coloring


def format_coloring(coloring: Coloring) -> str:
    lines = [f"edge {u} {v} = {c}" for (u, v), c in sorted(coloring.edge_color.items())]
    lines += [f"vertex {v} = {c}" for v, c in sorted(coloring.vertex_color.items())]
    return "\n".join(lines) + "\n" if lines else ""


def format_violations(result: VerificationResult) -> str:
    """One ``violation <kind> <elements...> [color=<c>]`` line each, or ``ok``."""
    if result.ok:
        return "ok\n"
    lines = []
    for violation in result.violations:
        line = f"violation {violation.kind.value} {' '.join(violation.elements)}"
        if violation.color is not None:
            line += f" color={violation.color}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def load_coloring(path: Path, mode: ColoringMode) -> Coloring:
    return parse_coloring(path.read_text(encoding="utf-8"), mode)
