"""Undirected DOT export, optionally labeled with a coloring."""

from pathlib import Path

from ....core.domain import Coloring, EmbeddedGraph


def to_dot(graph: EmbeddedGraph, coloring: Coloring | None = None) -> str:
    lines = ["graph G {"]
    for v in graph.vertices():
        color = coloring.vertex_color.get(v) if coloring else None
        lines.append(f'  {v} [label="{v}:{color}"];' if color is not None else f"  {v};")
    for u, v in graph.edges():
        color = coloring.color_of(u, v) if coloring else None
        suffix = f' [label="{color}"]' if color is not None else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(path: Path, graph: EmbeddedGraph, coloring: Coloring | None = None) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_dot(graph, coloring), encoding="utf-8")
