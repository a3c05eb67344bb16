#!/usr/bin/env python3
"""Acceptance matrix for kitecolor.

Runs every acceptance check at full scale on generated graphs and prints one
row per check. Exits non-zero if any check has a failure.

Usage:
    poetry run python scripts/run_acceptance.py
    poetry run python scripts/run_acceptance.py --only charge --only oracle --scale 0.2
"""

import logging
import sys
import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import typer
from rich.console import Console
from rich.table import Table

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config.logging import setup_logging  # noqa: E402
from src.core.domain import (  # noqa: E402
    ColoringMode,
    Configuration,
    EmbeddedGraph,
    GenSpec,
    Guarantee,
    ListAssignment,
    OracleBudget,
    RuleSetId,
    StructureTheorem,
)
from src.core.domain.exceptions import (  # noqa: E402
    AvailabilityBelowBoundError,
    ConfigurationNotFoundError,
    InternalExtensionFailureError,
    KiteColorError,
    PreconditionViolatedError,
)
from src.core.services.coloring import (  # noqa: E402
    PeelingEngine,
    check_preconditions,
    required_list_size,
)
from src.core.services.discharging import audit  # noqa: E402
from src.core.services.generator import generate_kite_free, random_lists  # noqa: E402
from src.core.services.oracle import OracleEngine, brute_force_choose  # noqa: E402
from src.core.services.structure import (  # noqa: E402
    check_configuration,
    find_delta6_config,
    find_for_theorem,
    find_light_edge,
)
from src.core.services.verification import verify_coloring  # noqa: E402

app = typer.Typer(add_completion=False)
console = Console()

# Raised only when the implementation itself is wrong.
BUG_DETECTORS = (
    InternalExtensionFailureError,
    ConfigurationNotFoundError,
    AvailabilityBelowBoundError,
)


@dataclass
class CheckResult:
    name: str
    runs: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)
    bug_detector_hits: int = 0
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and self.runs > 0


def _graphs(
    count: int, sizes: Callable[[int], int], **spec: Any
) -> Iterator[tuple[int, EmbeddedGraph]]:
    for seed in range(count):
        yield seed, generate_kite_free(GenSpec(n=sizes(seed), seed=seed, **spec))


def _color_and_verify(
    result: CheckResult,
    label: str,
    g: EmbeddedGraph,
    lists: ListAssignment,
    guarantee: Guarantee,
    engine: PeelingEngine | OracleEngine,
) -> None:
    try:
        coloring = engine.color(g, lists, guarantee)
    except BUG_DETECTORS as e:
        result.bug_detector_hits += 1
        result.failures.append(f"{label}: {e.error_code} {e}")
        return
    except KiteColorError as e:
        result.failures.append(f"{label}: {e.error_code} {e}")
        return
    violations = verify_coloring(g, lists, coloring).violations
    if violations:
        result.failures.append(f"{label}: {len(violations)} violations")


def check_charge_sum(scale: float) -> CheckResult:
    """Every rule set conserves a total of -8 on connected plane graphs."""
    result = CheckResult("charge-sum identity")
    count = max(1, int(100 * scale))
    for seed, g in _graphs(count, lambda s: 10 + (s * 199) % 1991):
        for ruleset in RuleSetId:
            result.runs += 1
            report = audit(g, ruleset)
            if report.total != -8 or not report.conserved:
                result.failures.append(f"seed {seed} {ruleset.label}: total {report.total}")
    return result


def check_finder_totality(scale: float) -> CheckResult:
    """Light-edge finders succeed wherever their structural statement applies."""
    result = CheckResult("finder totality")
    count = max(1, int(200 * scale))
    for seed, g in _graphs(count, lambda s: 60 + (s * 37) % 400, target_min_delta=9):
        delta = g.max_degree()
        statements: list[tuple[str, Callable[[], Configuration | None]]] = []
        if delta >= 7:
            statements.append(("t4", lambda: find_light_edge(g, delta + 2, 4)))
        if delta >= 9:
            statements.append(("t7", lambda: find_for_theorem(g, StructureTheorem.T7)))
        if delta == 6:
            statements.append(("l5", lambda: find_delta6_config(g)))
        if not statements:
            result.skipped += 1
        for name, find in statements:
            result.runs += 1
            try:
                cfg = find()
            except ConfigurationNotFoundError as e:
                result.bug_detector_hits += 1
                result.failures.append(f"seed {seed} {name}: {e}")
                continue
            if cfg is None:
                result.failures.append(f"seed {seed} {name}: nothing found at delta {delta}")
            elif problems := check_configuration(g, cfg):
                result.failures.append(f"seed {seed} {name}: invalid ({'; '.join(problems)})")

    for seed, g in _graphs(count, lambda s: 40 + (s * 13) % 200, target_min_delta=6, max_delta=6):
        if g.max_degree() != 6:
            continue
        result.runs += 1
        try:
            cfg = find_delta6_config(g)
        except ConfigurationNotFoundError as e:
            result.bug_detector_hits += 1
            result.failures.append(f"seed {seed} delta=6: {e}")
            continue
        if problems := check_configuration(g, cfg):
            result.failures.append(f"seed {seed} delta=6: invalid ({'; '.join(problems)})")
    return result


def _choosability(
    name: str,
    scale: float,
    mode: ColoringMode,
    guarantee: Guarantee,
    delta_range: tuple[int, int | None],
    spec: dict[str, Any],
) -> CheckResult:
    result = CheckResult(name)
    engine = PeelingEngine()
    low, high = delta_range
    count = max(1, int(100 * scale))
    seed = 0
    while result.runs < count and seed < 20 * count:
        g = generate_kite_free(GenSpec(n=80 + (seed * 53) % 900, seed=seed, **spec))
        seed += 1
        delta = g.max_degree()
        if delta < low or (high is not None and delta > high):
            result.skipped += 1
            continue
        k = required_list_size(delta, mode, guarantee)
        lists = random_lists(g, k, k + 5, mode, seed)
        result.runs += 1
        _color_and_verify(result, f"seed {seed - 1}", g, lists, guarantee, engine)
    return result


def check_edge_delta_plus_one(scale: float) -> CheckResult:
    return _choosability(
        "edge lists max(7, delta+1), 6<=delta<=8",
        scale,
        ColoringMode.EDGE,
        Guarantee.DELTA_PLUS_1,
        (6, 8),
        {"target_min_delta": 6, "max_delta": 8},
    )


def check_edge_delta(scale: float) -> CheckResult:
    return _choosability(
        "edge lists delta, delta>=9",
        scale,
        ColoringMode.EDGE,
        Guarantee.DELTA,
        (9, None),
        {"target_min_delta": 9},
    )


def check_total_plus_two(scale: float) -> CheckResult:
    return _choosability(
        "total lists delta+2, delta>=7",
        scale,
        ColoringMode.TOTAL,
        Guarantee.DELTA_PLUS_2,
        (7, None),
        {"target_min_delta": 7},
    )


def check_total_plus_one(scale: float) -> CheckResult:
    return _choosability(
        "total lists delta+1, delta>=9",
        scale,
        ColoringMode.TOTAL,
        Guarantee.DELTA_PLUS_1,
        (9, None),
        {"target_min_delta": 9},
    )


def check_oracle_cross(scale: float) -> CheckResult:
    """Both engines succeed on small instances whenever preconditions hold."""
    result = CheckResult("oracle cross-check")
    main, oracle = PeelingEngine(), OracleEngine(OracleBudget(max_elements=40))
    cases = [
        (ColoringMode.EDGE, Guarantee.DELTA_PLUS_1),
        (ColoringMode.EDGE, Guarantee.DELTA),
        (ColoringMode.TOTAL, Guarantee.DELTA_PLUS_2),
        (ColoringMode.TOTAL, Guarantee.DELTA_PLUS_1),
    ]
    count = max(1, int(500 * scale))
    for seed, g in _graphs(count, lambda s: 4 + s % 6):
        if g.edge_count > 14:
            result.skipped += 1
            continue
        for mode, guarantee in cases:
            k = required_list_size(g.max_degree(), mode, guarantee)
            lists = random_lists(g, k, k + 2, mode, seed)
            try:
                check_preconditions(g, lists, guarantee)
            except PreconditionViolatedError:
                result.skipped += 1
                continue
            result.runs += 1
            label = f"seed {seed} {mode.value}/{guarantee.value}"
            _color_and_verify(result, f"{label} main", g, lists, guarantee, main)
            _color_and_verify(result, f"{label} oracle", g, lists, guarantee, oracle)

    for length, expect in ((3, False), (4, True)):
        cycle = EmbeddedGraph.from_rotations(
            [[(v - 1) % length, (v + 1) % length] for v in range(length)]
        )
        lists = ListAssignment.uniform(cycle, 2, ColoringMode.EDGE)
        found = brute_force_choose(cycle, lists, ColoringMode.EDGE, OracleBudget())
        result.runs += 1
        if (found is not None) != expect:
            result.failures.append(f"C{length} with 2-lists: expected colorable={expect}")
    return result


CHECKS: dict[str, Callable[[float], CheckResult]] = {
    "charge": check_charge_sum,
    "finders": check_finder_totality,
    "edge-d1": check_edge_delta_plus_one,
    "edge-d": check_edge_delta,
    "total-d2": check_total_plus_two,
    "total-d1": check_total_plus_one,
    "oracle": check_oracle_cross,
}


@app.command()
def main(
    only: list[str] = typer.Option(None, help=f"Run only these checks: {', '.join(CHECKS)}"),
    scale: float = typer.Option(1.0, min=0.01, help="Fraction of the full instance counts"),
    log_level: str = typer.Option("ERROR", help="Library log level"),
) -> None:
    """Run the acceptance matrix and print a summary table."""
    setup_logging(log_level)
    logging.getLogger("src").propagate = False

    selected = only or list(CHECKS)
    unknown = [name for name in selected if name not in CHECKS]
    if unknown:
        raise typer.BadParameter(f"unknown checks: {', '.join(unknown)}")

    results = []
    for name in selected:
        console.print(f"[cyan]Running {name}...[/]")
        start = time.perf_counter()
        result = CHECKS[name](scale)
        result.seconds = time.perf_counter() - start
        results.append(result)

    table = Table(title="Acceptance")
    for column in ("check", "runs", "skipped", "failures", "bug detectors", "seconds", "status"):
        table.add_column(column)
    for r in results:
        status = "[green]PASS[/]" if r.passed else "[red]FAIL[/]"
        table.add_row(
            r.name,
            str(r.runs),
            str(r.skipped),
            str(len(r.failures)),
            str(r.bug_detector_hits),
            f"{r.seconds:.1f}",
            status,
        )
    console.print(table)

    for r in results:
        for failure in r.failures[:10]:
            console.print(f"[red]{r.name}:[/] {failure}", highlight=False)

    if not all(r.passed for r in results) or any(r.bug_detector_hits for r in results):
        raise typer.Exit(1)


if __name__ == "__main__":
    app()
