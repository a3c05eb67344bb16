"""List edge and total coloring of kite-free graphs by peeling and replay.

The engine repeatedly asks the dispatch table for a reducible configuration,
deletes its edges and records the step. Once the remainder is small (edge
mode) or edgeless (total mode) it is colored directly, and the recorded
steps are replayed in reverse, coloring each configuration back in.
"""

import logging
from collections import defaultdict
from collections.abc import Callable, Collection

from ..domain import (
    Coloring,
    ColoringMode,
    Configuration,
    EmbeddedGraph,
    EulerReport,
    FinderMode,
    Guarantee,
    LightEdge,
    LightFourFace,
    ListAssignment,
    OracleBudget,
    PeelStep,
    PeelTrace,
    TwoAltCycle,
    format_edge,
)
from ..domain.exceptions import (
    AvailabilityBelowBoundError,
    ColoringError,
    ExtensionFailureError,
    InternalExtensionFailureError,
    NoColoringFoundError,
    PreconditionViolatedError,
    ValidationError,
)
from ..ports import ColoringEnginePort
from .embedding import euler_characteristic, find_kites
from .extension import color_even_cycle, triple_triangle_colors
from .oracle import brute_force_choose
from .peeling import PeelIndex
from .structure import check_configuration, dispatch
from .verification import require_lists_cover

logger = logging.getLogger(__name__)

SMALL_DELTA = 4

FINDER_MODES: dict[tuple[ColoringMode, Guarantee], FinderMode] = {
    (ColoringMode.EDGE, Guarantee.DELTA_PLUS_1): FinderMode.EDGE_D1,
    (ColoringMode.EDGE, Guarantee.DELTA): FinderMode.EDGE_D,
    (ColoringMode.TOTAL, Guarantee.DELTA_PLUS_2): FinderMode.TOTAL_D2,
    (ColoringMode.TOTAL, Guarantee.DELTA_PLUS_1): FinderMode.TOTAL_D1,
}

RESCUABLE = (InternalExtensionFailureError, AvailabilityBelowBoundError, ExtensionFailureError)


def required_list_size(delta: int, mode: ColoringMode, guarantee: Guarantee) -> int:
    """Smallest list size ``guarantee`` allows at maximum degree ``delta``."""
    match mode, guarantee:
        case ColoringMode.EDGE, Guarantee.DELTA_PLUS_1:
            need = delta + 2 if delta == 5 else delta + 1
            return max(need, 7) if delta in (5, 6) else need
        case ColoringMode.EDGE, Guarantee.DELTA:
            return delta
        case ColoringMode.TOTAL, Guarantee.DELTA_PLUS_2:
            return delta + 2
        case ColoringMode.TOTAL, Guarantee.DELTA_PLUS_1:
            return delta + 1
    raise ValidationError(
        f"guarantee {guarantee.value} is not available in {mode.value} mode",
        context={"mode": mode.value, "guarantee": guarantee.value},
    )


def check_preconditions(
    graph: EmbeddedGraph, lists: ListAssignment, guarantee: Guarantee
) -> EulerReport:
    """Validate the input against ``guarantee``.

    Returns:
        The Euler report, whose zero-characteristic flag steers dispatch.

    Raises:
        ListFormatError: Some element has no list.
        ValidationError: The guarantee does not apply to the list mode.
        PreconditionViolatedError: A kite, a component of negative Euler
            characteristic, a maximum degree out of range, or short lists.
    """
    mode = lists.mode
    require_lists_cover(graph, lists)
    kites = find_kites(graph)
    if kites:
        raise PreconditionViolatedError(
            f"graph contains {len(kites)} kites",
            context={"kites": [format_edge(k.shared_edge) for k in kites[:5]]},
        )
    euler = euler_characteristic(graph)
    if not euler.nonnegative:
        raise PreconditionViolatedError(
            "a component has negative Euler characteristic",
            context={"per_component": list(euler.per_component)},
        )

    delta = graph.max_degree()
    need = required_list_size(delta, mode, guarantee)
    minimum_delta = {
        (ColoringMode.EDGE, Guarantee.DELTA): 9,
        (ColoringMode.TOTAL, Guarantee.DELTA_PLUS_2): 7,
        (ColoringMode.TOTAL, Guarantee.DELTA_PLUS_1): 9,
    }.get((mode, guarantee), 0)
    if delta < minimum_delta:
        raise PreconditionViolatedError(
            f"guarantee {guarantee.value} needs max degree >= {minimum_delta}, got {delta}",
            context={"max_degree": delta, "guarantee": guarantee.value},
        )
    if mode is ColoringMode.EDGE and euler.has_zero_component and delta in (5, 6):
        raise PreconditionViolatedError(
            "on a surface of Euler characteristic 0 the delta_plus_1 guarantee "
            "needs max degree >= 7 or <= 4",
            context={"max_degree": delta},
        )
    smallest = lists.min_size()
    if smallest < need:
        raise PreconditionViolatedError(
            f"lists must have at least {need} colors, smallest has {smallest}",
            context={"required": need, "smallest": smallest, "max_degree": delta},
        )
    return euler


def _first_free(options: Collection[int], blocked: Collection[int]) -> int | None:
    return next((c for c in options if c not in blocked), None)


class PeelingEngine(ColoringEnginePort):
    """Coloring engine that peels reducible configurations and replays them."""

    name = "main"

    def __init__(
        self,
        *,
        strict_checks: bool = True,
        rescue_oracle: bool = False,
        edge_base_case_edges: int = 7,
        budget: OracleBudget | None = None,
    ) -> None:
        """Initialize the engine.

        Args:
            strict_checks: Assert the constraint-count arithmetic at every
                replay step and validate every configuration before deletion.
            rescue_oracle: Hand the whole instance to the oracle when a replay
                step fails instead of raising.
            edge_base_case_edges: Edge-mode remainders at or below this size
                go to the oracle.
            budget: Oracle budget for base cases and rescue.
        """
        self.strict_checks = strict_checks
        self.rescue_oracle = rescue_oracle
        self.edge_base_case_edges = edge_base_case_edges
        self.budget = budget or OracleBudget()

    def color(
        self,
        graph: EmbeddedGraph,
        lists: ListAssignment,
        guarantee: Guarantee,
    ) -> Coloring:
        if lists.mode is ColoringMode.EDGE:
            return self.choose_edges(graph, lists, guarantee)
        return self.choose_total(graph, lists, guarantee)

    def choose_edges(
        self, graph: EmbeddedGraph, lists: ListAssignment, guarantee: Guarantee
    ) -> Coloring:
        """Proper edge coloring from ``lists`` under ``guarantee`` (delta_plus_1 or delta).

        Raises:
            PreconditionViolatedError: The input is outside the guarantee.
            InternalExtensionFailureError: A replay step found no color.
        """
        if lists.mode is not ColoringMode.EDGE:
            raise ValidationError("choose_edges needs edge lists", context={"mode": lists.mode.value})
        return self._run(graph, lists, guarantee, self._edges)

    def choose_total(
        self, graph: EmbeddedGraph, lists: ListAssignment, guarantee: Guarantee
    ) -> Coloring:
        """Proper total coloring from ``lists`` under ``guarantee`` (delta_plus_2 or delta_plus_1).

        Raises:
            PreconditionViolatedError: The input is outside the guarantee.
            InternalExtensionFailureError: A replay step found no color.
        """
        if lists.mode is not ColoringMode.TOTAL:
            raise ValidationError(
                "choose_total needs total lists", context={"mode": lists.mode.value}
            )
        return self._run(graph, lists, guarantee, self._total)

    def _run(
        self,
        graph: EmbeddedGraph,
        lists: ListAssignment,
        guarantee: Guarantee,
        body: Callable[[EmbeddedGraph, ListAssignment, Guarantee, EulerReport], Coloring],
    ) -> Coloring:
        if graph.edge_count == 0:
            require_lists_cover(graph, lists)
            return self._color_vertices_greedily(graph, lists)
        euler = check_preconditions(graph, lists, guarantee)
        try:
            return body(graph, lists, guarantee, euler)
        except RESCUABLE as e:
            if not self.rescue_oracle:
                raise
            logger.warning("Replay failed (%s); handing the instance to the oracle", e.error_code)
            rescued = brute_force_choose(graph, lists, lists.mode, self.budget)
            if rescued is None:
                raise NoColoringFoundError(
                    "oracle rescue found no coloring", cause=e, context={"mode": lists.mode.value}
                ) from e
            return rescued

    # Peeling

    def _peel(
        self,
        index: PeelIndex,
        next_configuration: Callable[[PeelIndex], Configuration | None],
        done: Callable[[PeelIndex], bool],
    ) -> PeelTrace:
        trace = PeelTrace()
        while not done(index):
            cfg = next_configuration(index)
            if cfg is None:
                break
            if self.strict_checks:
                problems = check_configuration(index.graph, cfg)
                if problems:
                    raise InternalExtensionFailureError(
                        f"finder returned an invalid {cfg.kind}",
                        context={"configuration": repr(cfg), "problems": problems},
                    )
            removed = cfg.edges()
            index.remove_edges(removed)
            trace.push(PeelStep(cfg, removed))
            logger.debug(
                "Peeled %s (%d edges), %d edges left, max degree %d",
                cfg.kind,
                len(removed),
                index.graph.edge_count,
                index.max_degree(),
            )
        logger.info("Peeled %d steps; %d edges remain", len(trace), index.graph.edge_count)
        return trace

    # Edge mode

    def _edges(
        self,
        graph: EmbeddedGraph,
        lists: ListAssignment,
        guarantee: Guarantee,
        euler: EulerReport,
    ) -> Coloring:
        delta_g = graph.max_degree()
        index = PeelIndex(graph)
        if delta_g <= SMALL_DELTA and guarantee is Guarantee.DELTA_PLUS_1:
            bound = lists.min_size() + 1
            trace = self._peel(
                index,
                lambda source: source.light_edge(bound, 6),
                lambda source: source.graph.edge_count <= self.edge_base_case_edges,
            )
        else:
            mode = FINDER_MODES[(ColoringMode.EDGE, guarantee)]
            trace = self._peel(
                index,
                lambda source: dispatch(
                    source, mode, delta_g, zero_surface=euler.has_zero_component
                ),
                lambda source: source.graph.edge_count <= self.edge_base_case_edges,
            )

        base = brute_force_choose(index.graph, lists, ColoringMode.EDGE, self.budget)
        if base is None:
            raise InternalExtensionFailureError(
                "base case has no coloring from its lists",
                context={"edges": index.graph.edge_count},
            )
        return self._replay_edges(trace, lists, base)

    def _replay_edges(self, trace: PeelTrace, lists: ListAssignment, base: Coloring) -> Coloring:
        coloring = base
        colors_at: dict[int, set[int]] = defaultdict(set)
        for (u, v), color in coloring.edge_color.items():
            colors_at[u].add(color)
            colors_at[v].add(color)

        for step in reversed(trace):
            cfg = step.configuration
            if isinstance(cfg, LightEdge):
                color = self._light_edge_color(cfg, lists, colors_at)
                added = {step.removed[0]: color}
            elif isinstance(cfg, LightFourFace | TwoAltCycle):
                added = self._cycle_colors(cfg, step.removed, lists, colors_at)
            else:
                added = triple_triangle_colors(cfg, lists, colors_at)
            for (u, v), color in added.items():
                coloring.edge_color[(u, v)] = color
                colors_at[u].add(color)
                colors_at[v].add(color)
        logger.info("Replayed %d steps; %d edges colored", len(trace), len(coloring.edge_color))
        return coloring

    def _light_edge_color(
        self, cfg: LightEdge, lists: ListAssignment, colors_at: dict[int, set[int]]
    ) -> int:
        options = lists.edge_list(cfg.u, cfg.v)
        at_u, at_v = colors_at[cfg.u], colors_at[cfg.v]
        if self.strict_checks and len(at_u) + len(at_v) >= len(options):
            raise InternalExtensionFailureError(
                f"{len(at_u) + len(at_v)} colored edges meet a light edge with a list of "
                f"{len(options)}",
                context={"configuration": repr(cfg)},
            )
        color = _first_free(options, at_u | at_v)
        if color is None:
            raise InternalExtensionFailureError(
                "no free color for a light edge", context={"configuration": repr(cfg)}
            )
        return color

    def _cycle_colors(
        self,
        cfg: LightFourFace | TwoAltCycle,
        removed: tuple[tuple[int, int], ...],
        lists: ListAssignment,
        colors_at: dict[int, set[int]],
        vertex_color: dict[int, int] | None = None,
    ) -> dict[tuple[int, int], int]:
        avail: dict[tuple[int, int], list[int]] = {}
        for u, v in removed:
            blocked = colors_at[u] | colors_at[v]
            if vertex_color is not None:
                blocked = blocked | {vertex_color[x] for x in (u, v) if x in vertex_color}
            avail[(u, v)] = [c for c in lists.edge_list(u, v) if c not in blocked]
        try:
            return color_even_cycle(removed, avail)
        except ColoringError as e:
            raise InternalExtensionFailureError(
                f"even cycle of a {cfg.kind} could not be colored",
                cause=e,
                context={
                    "configuration": repr(cfg),
                    "available": {format_edge(k): a for k, a in avail.items()},
                },
            ) from e

    # Total mode

    def _color_vertices_greedily(self, graph: EmbeddedGraph, lists: ListAssignment) -> Coloring:
        coloring = Coloring(lists.mode)
        if lists.mode is ColoringMode.TOTAL:
            for v in graph.vertices():
                coloring.vertex_color[v] = lists.vertex_lists[v][0]
        return coloring

    def _total(
        self,
        graph: EmbeddedGraph,
        lists: ListAssignment,
        guarantee: Guarantee,
        euler: EulerReport,
    ) -> Coloring:
        delta_g = graph.max_degree()
        mode = FINDER_MODES[(ColoringMode.TOTAL, guarantee)]
        index = PeelIndex(graph)
        trace = self._peel(
            index,
            lambda source: dispatch(source, mode, delta_g, zero_surface=euler.has_zero_component),
            lambda source: source.graph.edge_count == 0,
        )
        if index.graph.edge_count:
            raise InternalExtensionFailureError(
                "total-mode peeling stopped before the graph was edgeless",
                context={"edges": index.graph.edge_count},
            )
        coloring = self._color_vertices_greedily(index.graph, lists)
        return self._replay_total(trace, lists, coloring)

    def _replay_total(self, trace: PeelTrace, lists: ListAssignment, coloring: Coloring) -> Coloring:
        vc = coloring.vertex_color
        colors_at: dict[int, set[int]] = defaultdict(set)
        adjacent: dict[int, set[int]] = defaultdict(set)

        def place(u: int, v: int, color: int) -> None:
            coloring.edge_color[(min(u, v), max(u, v))] = color
            colors_at[u].add(color)
            colors_at[v].add(color)
            adjacent[u].add(v)
            adjacent[v].add(u)

        for step in reversed(trace):
            cfg = step.configuration
            if isinstance(cfg, LightEdge):
                u, v = cfg.u, cfg.v
                del vc[u]
                options = lists.edge_list(u, v)
                blocked = colors_at[u] | colors_at[v] | {vc[v]}
                self._assert_room(len(colors_at[u]) + len(colors_at[v]) + 1, options, cfg)
                color = _first_free(options, blocked)
                if color is None:
                    raise InternalExtensionFailureError(
                        "no free color for a light edge", context={"configuration": repr(cfg)}
                    )
                place(u, v, color)
                self._recolor_vertex(u, lists, colors_at, adjacent, vc, cfg)
            elif isinstance(cfg, TwoAltCycle):
                for w in cfg.two_vertices:
                    del vc[w]
                added = self._cycle_colors(cfg, step.removed, lists, colors_at, vc)
                for (u, v), color in added.items():
                    place(u, v, color)
                for w in cfg.two_vertices:
                    self._recolor_vertex(w, lists, colors_at, adjacent, vc, cfg)
            else:
                raise InternalExtensionFailureError(
                    f"{cfg.kind} cannot be replayed in total mode",
                    context={"configuration": repr(cfg)},
                )
        logger.info("Replayed %d steps in total mode", len(trace))
        return coloring

    def _recolor_vertex(
        self,
        u: int,
        lists: ListAssignment,
        colors_at: dict[int, set[int]],
        adjacent: dict[int, set[int]],
        vc: dict[int, int],
        cfg: Configuration,
    ) -> None:
        options = lists.vertex_lists[u]
        blocked = colors_at[u] | {vc[w] for w in adjacent[u] if w in vc}
        self._assert_room(len(colors_at[u]) + len(adjacent[u]), options, cfg)
        color = _first_free(options, blocked)
        if color is None:
            raise InternalExtensionFailureError(
                f"no free color for vertex {u}", context={"configuration": repr(cfg)}
            )
        vc[u] = color

    def _assert_room(self, constraints: int, options: Collection[int], cfg: Configuration) -> None:
        if self.strict_checks and constraints >= len(options):
            raise InternalExtensionFailureError(
                f"{constraints} constraints against a list of {len(options)}",
                context={"configuration": repr(cfg)},
            )


def choose_edges(
    graph: EmbeddedGraph, lists: ListAssignment, guarantee: Guarantee = Guarantee.DELTA_PLUS_1
) -> Coloring:
    """Edge coloring with a default-configured PeelingEngine."""
    return PeelingEngine().choose_edges(graph, lists, guarantee)


def choose_total(
    graph: EmbeddedGraph, lists: ListAssignment, guarantee: Guarantee = Guarantee.DELTA_PLUS_2
) -> Coloring:
    """Total coloring with a default-configured PeelingEngine."""
    return PeelingEngine().choose_total(graph, lists, guarantee)
