#!/usr/bin/env python3
"""Empirical scaling of edge list coloring.

Times choose_edges on generated graphs at doubling sizes and reports the
median per size plus the growth factor per doubling. Exits non-zero when a
doubling costs more than --max-ratio or the largest size exceeds --max-seconds.

Usage:
    poetry run python scripts/benchmark_scaling.py
    poetry run python scripts/benchmark_scaling.py --sizes 2000 --sizes 4000 --seeds 2
"""

import statistics
import sys
import time
from itertools import pairwise
from pathlib import Path

import typer
from rich.console import Console
from rich.table import Table

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config.logging import setup_logging  # noqa: E402
from src.core.domain import ColoringMode, GenSpec, Guarantee  # noqa: E402
from src.core.services.coloring import PeelingEngine, required_list_size  # noqa: E402
from src.core.services.generator import generate_kite_free, random_lists  # noqa: E402
from src.core.services.verification import verify_coloring  # noqa: E402

app = typer.Typer(add_completion=False)
console = Console()

DEFAULT_SIZES = [10_000, 20_000, 40_000, 80_000]


def time_one(n: int, seed: int, engine: PeelingEngine) -> tuple[float, int]:
    """Seconds spent in choose_edges for one generated instance, and its max degree."""
    g = generate_kite_free(GenSpec(n=n, seed=seed, target_min_delta=9))
    delta = g.max_degree()
    guarantee = Guarantee.DELTA if delta >= 9 else Guarantee.DELTA_PLUS_1
    k = required_list_size(delta, ColoringMode.EDGE, guarantee)
    lists = random_lists(g, k, k + 5, ColoringMode.EDGE, seed)

    start = time.perf_counter()
    coloring = engine.choose_edges(g, lists, guarantee)
    elapsed = time.perf_counter() - start

    if not verify_coloring(g, lists, coloring).ok:
        console.print(f"[red]n={n} seed={seed}: coloring failed verification[/]")
        raise typer.Exit(1)
    return elapsed, delta


@app.command()
def main(
    sizes: list[int] = typer.Option(DEFAULT_SIZES, help="Vertex counts, in increasing order"),
    seeds: int = typer.Option(3, min=1, help="Instances per size"),
    max_ratio: float = typer.Option(2.6, help="Allowed growth factor per doubling"),
    max_seconds: float = typer.Option(30.0, help="Allowed median time at the largest size"),
    strict_checks: bool = typer.Option(True, "--strict-checks/--no-strict-checks"),
) -> None:
    """Run the scaling benchmark and print a table of medians."""
    setup_logging("ERROR")
    engine = PeelingEngine(strict_checks=strict_checks)

    medians: list[float] = []
    table = Table(title="choose_edges scaling")
    for column in ("n", "max degree", "median s", "ratio"):
        table.add_column(column, justify="right")

    for n in sizes:
        runs = [time_one(n, seed, engine) for seed in range(seeds)]
        median = statistics.median(t for t, _ in runs)
        ratio = f"{median / medians[-1]:.2f}" if medians and medians[-1] > 0 else "-"
        medians.append(median)
        degrees = sorted({d for _, d in runs})
        table.add_row(str(n), ",".join(map(str, degrees)), f"{median:.3f}", ratio)
        console.print(f"n={n}: median {median:.3f}s")

    console.print(table)

    failed = False
    for (small, t_small), (large, t_large) in pairwise(zip(sizes, medians, strict=True)):
        doublings = max((large // small).bit_length() - 1, 1)
        allowed = max_ratio**doublings
        if t_small > 0 and t_large / t_small > allowed:
            console.print(f"[red]n={small} -> {large}: x{t_large / t_small:.2f} > {allowed:.2f}[/]")
            failed = True
    if medians and medians[-1] > max_seconds:
        console.print(f"[red]n={sizes[-1]} took {medians[-1]:.1f}s > {max_seconds:.1f}s[/]")
        failed = True

    if failed:
        raise typer.Exit(1)
    console.print("[green]Scaling within bounds[/]")


if __name__ == "__main__":
    app()
