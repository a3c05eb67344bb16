"""Text codecs for graphs, lists, colorings and reports."""

from .coloring_format import format_coloring, format_violations, load_coloring, parse_coloring
from .dot_format import to_dot, write_dot
from .graph_format import format_graph, load_graph, parse_graph
from .list_format import format_lists, load_lists, parse_lists
from .report_format import format_audit, format_configuration, format_fraction, format_stats

__all__ = [
    "format_audit",
    "format_coloring",
    "format_configuration",
    "format_fraction",
    "format_graph",
    "format_lists",
    "format_stats",
    "format_violations",
    "load_coloring",
    "load_graph",
    "load_lists",
    "parse_coloring",
    "parse_graph",
    "parse_lists",
    "to_dot",
    "write_dot",
]
