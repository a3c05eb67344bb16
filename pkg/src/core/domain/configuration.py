"""Reducible configurations found in kite-free embedded graphs.

A configuration names a small set of edges that can be removed, the rest
colored inductively, and the removed edges colored back in.
"""

from dataclasses import dataclass
from enum import Enum
from typing import ClassVar

from .graph import EdgeId, edge_id


class FinderMode(str, Enum):
    """Which coloring induction a configuration search serves.

    Attributes:
        EDGE_D1: Edge coloring from lists of size max(7, Delta + 1).
        EDGE_D: Edge coloring from lists of size Delta (Delta >= 9).
        TOTAL_D2: Total coloring from lists of size Delta + 2 (Delta >= 7).
        TOTAL_D1: Total coloring from lists of size Delta + 1 (Delta >= 9).
    """

    EDGE_D1 = "edge_d1"
    EDGE_D = "edge_d"
    TOTAL_D2 = "total_d2"
    TOTAL_D1 = "total_d1"


class StructureTheorem(str, Enum):
    """Structural statements the finders can be asked to witness directly.

    Attributes:
        T4: Delta >= 7: an edge uv with d(u) <= 4 and d(u) + d(v) <= Delta + 2.
        L5: Delta = 6: light edge, light 4-face, or triple-triangle center.
        L6: Delta <= 5: degree sum <= 8; Delta = 6: degree sum <= 9.
        L7: Delta <= 6 on a surface of characteristic >= 0: degree sum <= 9.
        T7: Delta >= 9: an edge with d(u) <= 4 and sum <= Delta + 1, or a
            2-alternating cycle.
    """

    T4 = "t4"
    L5 = "l5"
    L6 = "l6"
    L7 = "l7"
    T7 = "t7"


@dataclass(frozen=True)
class LightEdge:
    """Edge uv with u the low endpoint; degrees recorded at discovery time."""

    kind: ClassVar[str] = "lightedge"

    u: int
    v: int
    deg_u: int
    deg_v: int

    @property
    def degree_sum(self) -> int:
        return self.deg_u + self.deg_v

    def edges(self) -> tuple[EdgeId, ...]:
        return (edge_id(self.u, self.v),)


@dataclass(frozen=True)
class LightFourFace:
    """4-face uvwx of the embedding with d(u) = d(w) = 3."""

    kind: ClassVar[str] = "fourface"

    u: int
    v: int
    w: int
    x: int

    @property
    def cycle(self) -> tuple[int, int, int, int]:
        return (self.u, self.v, self.w, self.x)

    def edges(self) -> tuple[EdgeId, ...]:
        """Cycle edges in cyclic order uv, vw, wx, xu."""
        c = self.cycle
        return tuple(edge_id(c[i], c[(i + 1) % 4]) for i in range(4))


@dataclass(frozen=True)
class TripleTriangleCenter:
    """A 6-vertex incident to three triangular faces, plus one pendant edge.

    Vertex roles are fixed so the extension step can label the ten edges:

    Attributes:
        center: X, degree 6.
        triangle1: (X, F, A) with d(A) = 3; A carries the pendant edge.
        triangle2: (X, B, C) with d(C) = 3.
        triangle3: (X, D, E) with d(D) >= d(E).
        pendant_edge: (A, P), the third edge at A.
    """

    kind: ClassVar[str] = "tritri"

    center: int
    triangle1: tuple[int, int, int]
    triangle2: tuple[int, int, int]
    triangle3: tuple[int, int, int]
    pendant_edge: tuple[int, int]

    def edges(self) -> tuple[EdgeId, ...]:
        out: list[EdgeId] = []
        for a, b, c in (self.triangle1, self.triangle2, self.triangle3):
            out.extend((edge_id(a, b), edge_id(b, c), edge_id(a, c)))
        out.append(edge_id(*self.pendant_edge))
        return tuple(out)


@dataclass(frozen=True)
class TwoAltCycle:
    """Even cycle v1 w1 v2 w2 ... vk wk in which every w_i has degree 2."""

    kind: ClassVar[str] = "altcycle"

    sequence: tuple[int, ...]

    @property
    def two_vertices(self) -> tuple[int, ...]:
        return self.sequence[1::2]

    def edges(self) -> tuple[EdgeId, ...]:
        """Cycle edges in cyclic order."""
        s = self.sequence
        return tuple(edge_id(s[i], s[(i + 1) % len(s)]) for i in range(len(s)))


Configuration = LightEdge | LightFourFace | TripleTriangleCenter | TwoAltCycle
