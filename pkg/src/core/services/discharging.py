"""Discharging rule sets evaluated with exact rationals.

Every vertex and face starts with charge d(x) - 4, so the total is
4(|E| - |V| - |F|): -8 for a connected plane graph, 0 on the torus. Rules
move charge between elements (and, for T7, a bank) without changing the
total. A triangle is a 3-face of the embedding, and a vertex meeting a face
several times takes part once per incidence.
"""

import logging
from collections.abc import Callable
from fractions import Fraction

from ..domain import AuditReport, ChargeState, EmbeddedGraph, Face, PreconditionCheck, RuleSetId
from .embedding import is_kite_free, trace_faces
from .structure import (
    find_light_edge,
    find_light_four_face,
    find_triple_triangle_center,
    find_two_alternating_cycle,
)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)
SIXTH = Fraction(1, 6)
BANK_SHARE = Fraction(4, 3)
LARGE = 5


def initial_charges(
    graph: EmbeddedGraph, ruleset: RuleSetId, faces: list[Face] | None = None
) -> ChargeState:
    """Charge d(x) - 4 on every vertex and traced face; bank 0 for T7."""
    faces = trace_faces(graph) if faces is None else faces
    return ChargeState(
        vertex_charge={v: Fraction(graph.degree(v) - 4) for v in graph.vertices()},
        face_charge={f.id: Fraction(f.degree - 4) for f in faces},
        bank=Fraction(0) if ruleset is RuleSetId.T7 else None,
    )


class _Transfers:
    """Accumulates simultaneous transfers on top of an initial state."""

    def __init__(self, state: ChargeState) -> None:
        self.state = state

    def vertex_to_face(self, v: int, f: int, amount: Fraction) -> None:
        self.state.vertex_charge[v] -= amount
        self.state.face_charge[f] += amount

    def face_to_vertex(self, f: int, v: int, amount: Fraction) -> None:
        self.state.face_charge[f] -= amount
        self.state.vertex_charge[v] += amount

    def vertex_to_vertex(self, src: int, dst: int, amount: Fraction) -> None:
        self.state.vertex_charge[src] -= amount
        self.state.vertex_charge[dst] += amount

    def vertex_to_bank(self, v: int, amount: Fraction) -> None:
        assert self.state.bank is not None
        self.state.vertex_charge[v] -= amount
        self.state.bank += amount


def _large_vertices_feed_triangles(
    graph: EmbeddedGraph, faces: list[Face], moves: _Transfers, *, degrees: Callable[[int], bool]
) -> None:
    for face in faces:
        if face.degree != 3:
            continue
        for v in face.vertices:
            if degrees(graph.degree(v)):
                moves.vertex_to_face(v, face.id, HALF)


def _rules_t4(graph: EmbeddedGraph, faces: list[Face], moves: _Transfers) -> None:
    delta = graph.max_degree()
    _large_vertices_feed_triangles(graph, faces, moves, degrees=lambda d: d >= LARGE)
    for v in graph.vertices():
        if graph.degree(v) != delta:
            continue
        for u in graph.neighbor_set(v):
            if graph.degree(u) == 3:
                moves.vertex_to_vertex(v, u, THIRD)


def _rules_l5(graph: EmbeddedGraph, faces: list[Face], moves: _Transfers) -> None:
    on_large_face: set[int] = set()
    for face in faces:
        if face.degree < LARGE:
            continue
        for v in face.vertices:
            on_large_face.add(v)
            if graph.degree(v) == 3:
                moves.face_to_vertex(face.id, v, HALF)

    _large_vertices_feed_triangles(graph, faces, moves, degrees=lambda d: d == 5)

    for face in faces:
        if face.degree != 3:
            continue
        has_low = any(graph.degree(t) in (3, 4) for t in face.vertices)
        for v in face.vertices:
            if graph.degree(v) == 6:
                moves.vertex_to_face(v, face.id, HALF if has_low else THIRD)
    for v in graph.vertices():
        if graph.degree(v) != 6:
            continue
        for u in graph.neighbor_set(v):
            if graph.degree(u) == 3:
                moves.vertex_to_vertex(v, u, SIXTH if u in on_large_face else THIRD)


def _rules_l6(graph: EmbeddedGraph, faces: list[Face], moves: _Transfers) -> None:
    _large_vertices_feed_triangles(graph, faces, moves, degrees=lambda d: d >= LARGE)


def _rules_t7(graph: EmbeddedGraph, faces: list[Face], moves: _Transfers) -> None:
    delta = graph.max_degree()
    for v in graph.vertices():
        if graph.degree(v) not in (delta, delta - 1):
            continue
        for u in graph.neighbor_set(v):
            if graph.degree(u) in (2, 3):
                moves.vertex_to_vertex(v, u, THIRD)
    _large_vertices_feed_triangles(graph, faces, moves, degrees=lambda d: d >= LARGE)
    for v in graph.vertices():
        if graph.degree(v) == delta:
            moves.vertex_to_bank(v, BANK_SHARE)
        elif graph.degree(v) == 2:
            moves.vertex_to_bank(v, -BANK_SHARE)


_RULES: dict[RuleSetId, Callable[[EmbeddedGraph, list[Face], _Transfers], None]] = {
    RuleSetId.T4: _rules_t4,
    RuleSetId.L5: _rules_l5,
    RuleSetId.L6_D5: _rules_l6,
    RuleSetId.T7: _rules_t7,
}


def apply_rules(
    graph: EmbeddedGraph, ruleset: RuleSetId, faces: list[Face] | None = None
) -> ChargeState:
    """Final charges after one simultaneous application of ``ruleset``."""
    faces = trace_faces(graph) if faces is None else faces
    moves = _Transfers(initial_charges(graph, ruleset, faces))
    _RULES[ruleset](graph, faces, moves)
    return moves.state


def _only_adjacent_to_delta(graph: EmbeddedGraph, degree: int) -> bool:
    delta = graph.max_degree()
    return all(
        graph.degree(u) == delta
        for v in graph.vertices()
        if graph.degree(v) == degree
        for u in graph.neighbor_set(v)
    )


def counterexample_preconditions(
    graph: EmbeddedGraph, ruleset: RuleSetId
) -> list[PreconditionCheck]:
    """Hypotheses a minimal counterexample for ``ruleset`` would satisfy."""
    delta = graph.max_degree()
    low = graph.min_degree()
    checks = [PreconditionCheck("kite-free", is_kite_free(graph))]
    match ruleset:
        case RuleSetId.T4:
            checks += [
                PreconditionCheck("delta>=7", delta >= 7),
                PreconditionCheck("min-degree>=3", low >= 3),
                PreconditionCheck(
                    "3-vertices adjacent only to delta-vertices",
                    _only_adjacent_to_delta(graph, 3),
                ),
                PreconditionCheck(
                    "no light edge d(u)<=4 and d(u)+d(v)<=delta+2",
                    find_light_edge(graph, delta + 2, 4) is None,
                ),
            ]
        case RuleSetId.L5:
            checks += [
                PreconditionCheck("delta=6", delta == 6),
                PreconditionCheck(
                    "no edge with d(u)+d(v)<=8", find_light_edge(graph, 8, 8) is None
                ),
                PreconditionCheck(
                    "no 4-face uvwx with d(u)=d(w)=3", find_light_four_face(graph) is None
                ),
                PreconditionCheck(
                    "no triple-triangle 6-vertex", find_triple_triangle_center(graph) is None
                ),
            ]
        case RuleSetId.L6_D5:
            checks += [
                PreconditionCheck("delta=5", delta == 5),
                PreconditionCheck("min-degree>=4", low >= 4),
                PreconditionCheck(
                    "no edge with d(u)+d(v)<=8", find_light_edge(graph, 8, 8) is None
                ),
            ]
        case RuleSetId.T7:
            checks += [
                PreconditionCheck("delta>=9", delta >= 9),
                PreconditionCheck("min-degree>=2", low >= 2),
                PreconditionCheck(
                    "2-vertices adjacent only to delta-vertices",
                    _only_adjacent_to_delta(graph, 2),
                ),
                PreconditionCheck(
                    "no light edge d(u)<=4 and d(u)+d(v)<=delta+1",
                    find_light_edge(graph, delta + 1, 4) is None,
                ),
                PreconditionCheck(
                    "no 2-alternating cycle", find_two_alternating_cycle(graph) is None
                ),
            ]
    return checks


def audit(graph: EmbeddedGraph, ruleset: RuleSetId) -> AuditReport:
    """Run ``ruleset`` and report negative elements and failed hypotheses."""
    faces = trace_faces(graph)
    initial = initial_charges(graph, ruleset, faces)
    final = apply_rules(graph, ruleset, faces)

    negatives = [f"v {v}" for v, c in sorted(final.vertex_charge.items()) if c < 0]
    negatives += [f"f {f}" for f, c in sorted(final.face_charge.items()) if c < 0]
    if final.bank is not None and final.bank < 0:
        negatives.append("bank")

    report = AuditReport(
        ruleset=ruleset,
        initial=initial,
        final=final,
        negatives=negatives,
        preconditions=counterexample_preconditions(graph, ruleset),
    )
    if not report.conserved:
        logger.error("Charge not conserved under %s", ruleset.label)
    logger.debug(
        "Audit %s: total=%s, %d negative elements, failed=%s",
        ruleset.label,
        report.total,
        len(negatives),
        report.failed_preconditions,
    )
    return report
