"""CLI interface for kitecolor.

Machine-readable results go to stdout in the documented text formats; errors
and log records go to stderr.
"""

import json
from enum import Enum
from pathlib import Path
from typing import NoReturn

import pydantic
import typer
from rich.console import Console
from rich.panel import Panel

from ....config.logging import setup_logging
from ....config.settings import Settings
from ....core.domain import (
    Coloring,
    ColoringMode,
    EmbeddedGraph,
    FinderMode,
    GenSpec,
    Guarantee,
    ListAssignment,
    RuleSetId,
    StructureTheorem,
)
from ....core.domain.exceptions import ValidationError
from ....core.ports import ColoringEnginePort
from ....core.services.coloring import PeelingEngine
from ....core.services.discharging import audit as run_audit
from ....core.services.embedding import graph_stats
from ....core.services.generator import generate_kite_free, random_lists
from ....core.services.oracle import OracleEngine
from ....core.services.structure import check_configuration, find_for_theorem, find_reducible
from ....core.services.verification import verify_coloring
from ...common.exception_handler import (
    EXIT_FAILURE,
    format_exception_json,
    get_exit_code,
    log_exception,
)
from ...outbound.formats import (
    format_audit,
    format_coloring,
    format_configuration,
    format_graph,
    format_lists,
    format_stats,
    format_violations,
    load_coloring,
    load_graph,
    load_lists,
    write_dot,
)

app = typer.Typer(
    name="kitecolor",
    help="kitecolor - list edge and total coloring of kite-free planar graphs",
    add_completion=False,
    no_args_is_help=True,
)

console = Console(stderr=True, legacy_windows=False)


class Engine(str, Enum):
    MAIN = "main"
    ORACLE = "oracle"


GRAPH_OPTION = typer.Option(
    ..., "--graph", exists=True, dir_okay=False, readable=True, help="Graph file"
)
DOT_OPTION = typer.Option(None, "--dot", dir_okay=False, help="Also write a DOT rendering here")


def handle_cli_error(exc: Exception, config: Settings | None = None) -> NoReturn:
    """Report ``exc`` on stderr and exit with its mapped code.

    In debug mode, shows full JSON error details.
    In normal mode, shows a one-line message with the error code.

    Args:
        exc: The exception to handle.
        config: Active settings (decides debug output).
    """
    log_exception(exc)
    debug = bool(config and config.debug)
    error_data = format_exception_json(exc, include_trace=debug)

    if debug:
        console.print(
            Panel(
                json.dumps(error_data, indent=2, default=str),
                title="[bold red]Error Details[/]",
                border_style="red",
            )
        )
    else:
        error_code = error_data["error"].get("code", "UNKNOWN")
        error_msg = error_data["error"]["message"]
        console.print(f"[red]Error [{error_code}]:[/] {error_msg}", highlight=False)

    raise typer.Exit(get_exit_code(exc))


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        typer.echo(text, nl=False)
    else:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text, encoding="utf-8")


@app.callback()
def main(
    ctx: typer.Context,
    log_level: str = typer.Option("WARNING", help="DEBUG, INFO, WARNING or ERROR"),
    log_json: bool = typer.Option(False, help="Emit log records as JSON"),
    log_file: Path | None = typer.Option(None, dir_okay=False, help="Also log to this file"),
    debug: bool = typer.Option(False, help="Show full error details"),
    strict_checks: bool = typer.Option(
        True, "--strict-checks/--no-strict-checks", help="Assert replay arithmetic"
    ),
    oracle_max_elements: int = typer.Option(30, help="Oracle limit on uncolored elements"),
    oracle_max_nodes: int = typer.Option(200_000, help="Oracle search-node cap"),
) -> None:
    """Build settings from the global flags and configure logging."""
    try:
        config = Settings(
            log_level=log_level,
            log_json=log_json,
            log_file=log_file,
            debug=debug,
            strict_checks=strict_checks,
            oracle_max_elements=oracle_max_elements,
            oracle_max_nodes=oracle_max_nodes,
        )
    except pydantic.ValidationError as exc:
        handle_cli_error(ValidationError("invalid global option", cause=exc))
    setup_logging(config.log_level, config.log_file, json_format=config.log_json)
    ctx.obj = config


def _settings(ctx: typer.Context) -> Settings:
    return ctx.obj if isinstance(ctx.obj, Settings) else Settings()


@app.command()
def stats(ctx: typer.Context, graph: Path = GRAPH_OPTION, dot: Path | None = DOT_OPTION) -> None:
    """Print n, edges, faces, max/min degree, kite count and Euler characteristic."""
    config = _settings(ctx)
    try:
        g = load_graph(graph)
        text = format_stats(graph_stats(g))
        if dot:
            write_dot(dot, g)
    except Exception as exc:
        handle_cli_error(exc, config)
    typer.echo(text, nl=False)


@app.command("find-config")
def find_config(
    ctx: typer.Context,
    graph: Path = GRAPH_OPTION,
    theorem: StructureTheorem | None = typer.Option(None, help="Structural statement to witness"),
    mode: FinderMode | None = typer.Option(None, help="Dispatch row to run"),
    delta: int | None = typer.Option(None, help="Max degree of the original graph (mode only)"),
    check: bool = typer.Option(False, help="Validate the configuration found"),
) -> None:
    """Find a reducible configuration and print it."""
    config = _settings(ctx)
    if (theorem is None) == (mode is None):
        raise typer.BadParameter("give exactly one of --theorem or --mode")
    try:
        g = load_graph(graph)
        if theorem is not None:
            found = find_for_theorem(g, theorem)
        else:
            assert mode is not None
            found = find_reducible(g, mode, g.max_degree() if delta is None else delta)
        problems = check_configuration(g, found) if (check and found is not None) else []
    except Exception as exc:
        handle_cli_error(exc, config)

    if found is None:
        typer.echo("none")
        raise typer.Exit(EXIT_FAILURE)
    typer.echo(format_configuration(found))
    for problem in problems:
        typer.echo(f"invalid: {problem}")
    if problems:
        raise typer.Exit(EXIT_FAILURE)


def _engine(config: Settings, engine: Engine) -> ColoringEnginePort:
    if engine is Engine.ORACLE:
        return OracleEngine(config.oracle_budget())
    return PeelingEngine(
        strict_checks=config.strict_checks,
        rescue_oracle=config.rescue_oracle,
        edge_base_case_edges=config.edge_base_case_edges,
        budget=config.oracle_budget(),
    )


def _lists_for(
    g: EmbeddedGraph,
    mode: ColoringMode,
    lists: Path | None,
    uniform: int | None,
    random_k: int | None,
    palette: int | None,
    seed: int,
) -> ListAssignment:
    sources = [source for source in (lists, uniform, random_k) if source is not None]
    if len(sources) != 1:
        raise typer.BadParameter("give exactly one of --lists, --uniform or --random-lists")
    if lists is not None:
        return load_lists(lists, mode)
    if uniform is not None:
        return ListAssignment.uniform(g, uniform, mode)
    assert random_k is not None
    return random_lists(g, random_k, random_k if palette is None else palette, mode, seed)


def _color(
    ctx: typer.Context,
    mode: ColoringMode,
    graph: Path,
    lists: Path | None,
    uniform: int | None,
    random_k: int | None,
    palette: int | None,
    seed: int,
    guarantee: Guarantee,
    engine: Engine,
    rescue_oracle: bool,
    output: Path | None,
    lists_out: Path | None,
    dot: Path | None,
) -> None:
    config = _settings(ctx)
    if rescue_oracle:
        config = config.model_copy(update={"rescue_oracle": True})
    try:
        g = load_graph(graph)
        assignment = _lists_for(g, mode, lists, uniform, random_k, palette, seed)
        coloring: Coloring = _engine(config, engine).color(g, assignment, guarantee)
        result = verify_coloring(g, assignment, coloring)
        if lists_out:
            _emit(format_lists(assignment), lists_out)
        if dot:
            write_dot(dot, g, coloring)
    except typer.BadParameter:
        raise
    except Exception as exc:
        handle_cli_error(exc, config)

    if not result.ok:
        typer.echo(format_violations(result), nl=False)
        raise typer.Exit(EXIT_FAILURE)
    _emit(format_coloring(coloring), output)


LISTS_OPTION = typer.Option(None, "--lists", exists=True, dir_okay=False, help="List file")
UNIFORM_OPTION = typer.Option(None, "--uniform", min=1, help="Give every element {0..k-1}")
RANDOM_OPTION = typer.Option(None, "--random-lists", min=1, help="Random k-subsets per element")
PALETTE_OPTION = typer.Option(None, "--palette", min=1, help="Palette size for --random-lists")
SEED_OPTION = typer.Option(0, "--seed", min=0, help="Seed for --random-lists")
ENGINE_OPTION = typer.Option(Engine.MAIN, "--engine", help="main (peeling) or oracle")
RESCUE_OPTION = typer.Option(False, "--rescue-oracle", help="Fall back to the oracle on failure")
OUTPUT_OPTION = typer.Option(None, "--output", dir_okay=False, help="Write the coloring here")
LISTS_OUT_OPTION = typer.Option(None, "--lists-out", dir_okay=False, help="Write the lists used")


@app.command("color-edges")
def color_edges(
    ctx: typer.Context,
    graph: Path = GRAPH_OPTION,
    lists: Path | None = LISTS_OPTION,
    uniform: int | None = UNIFORM_OPTION,
    random_k: int | None = RANDOM_OPTION,
    palette: int | None = PALETTE_OPTION,
    seed: int = SEED_OPTION,
    guarantee: Guarantee = typer.Option(Guarantee.DELTA_PLUS_1, help="delta_plus_1 or delta"),
    engine: Engine = ENGINE_OPTION,
    rescue_oracle: bool = RESCUE_OPTION,
    output: Path | None = OUTPUT_OPTION,
    lists_out: Path | None = LISTS_OUT_OPTION,
    dot: Path | None = DOT_OPTION,
) -> None:
    """List edge coloring."""
    _color(
        ctx, ColoringMode.EDGE, graph, lists, uniform, random_k, palette, seed,
        guarantee, engine, rescue_oracle, output, lists_out, dot,
    )  # fmt: skip


@app.command("color-total")
def color_total(
    ctx: typer.Context,
    graph: Path = GRAPH_OPTION,
    lists: Path | None = LISTS_OPTION,
    uniform: int | None = UNIFORM_OPTION,
    random_k: int | None = RANDOM_OPTION,
    palette: int | None = PALETTE_OPTION,
    seed: int = SEED_OPTION,
    guarantee: Guarantee = typer.Option(Guarantee.DELTA_PLUS_2, help="delta_plus_2 or delta_plus_1"),
    engine: Engine = ENGINE_OPTION,
    rescue_oracle: bool = RESCUE_OPTION,
    output: Path | None = OUTPUT_OPTION,
    lists_out: Path | None = LISTS_OUT_OPTION,
    dot: Path | None = DOT_OPTION,
) -> None:
    """List total coloring."""
    _color(
        ctx, ColoringMode.TOTAL, graph, lists, uniform, random_k, palette, seed,
        guarantee, engine, rescue_oracle, output, lists_out, dot,
    )  # fmt: skip


@app.command()
def verify(
    ctx: typer.Context,
    graph: Path = GRAPH_OPTION,
    coloring: Path = typer.Option(..., exists=True, dir_okay=False, help="Coloring file"),
    lists: Path = typer.Option(..., exists=True, dir_okay=False, help="List file"),
    mode: ColoringMode = typer.Option(ColoringMode.EDGE, help="edge or total"),
) -> None:
    """Check a coloring against a graph and lists; exit 1 on any violation."""
    config = _settings(ctx)
    try:
        g = load_graph(graph)
        result = verify_coloring(g, load_lists(lists, mode), load_coloring(coloring, mode))
    except Exception as exc:
        handle_cli_error(exc, config)
    typer.echo(format_violations(result), nl=False)
    if not result.ok:
        raise typer.Exit(EXIT_FAILURE)


@app.command()
def audit(
    ctx: typer.Context,
    graph: Path = GRAPH_OPTION,
    rules: RuleSetId = typer.Option(..., help="Rule set: t4, l5, l6 or t7"),
) -> None:
    """Run a discharging rule set and print charges, total and precondition status."""
    config = _settings(ctx)
    try:
        report = run_audit(load_graph(graph), rules)
    except Exception as exc:
        handle_cli_error(exc, config)
    typer.echo(format_audit(report), nl=False)


@app.command()
def generate(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="Vertex count (>= 3)"),
    seed: int = typer.Option(0, help="64-bit seed"),
    min_delta: int = typer.Option(0, help="Best-effort lower bound on the max degree"),
    triangle_free: bool = typer.Option(False, help="Remove every triangle"),
    max_delta: int | None = typer.Option(None, help="Cap on the max degree"),
    output: Path | None = typer.Option(None, dir_okay=False, help="Write the graph here"),
    dot: Path | None = DOT_OPTION,
) -> None:
    """Generate a kite-free plane graph in the graph file format."""
    config = _settings(ctx)
    try:
        spec = GenSpec(
            n=n,
            seed=seed,
            target_min_delta=min_delta,
            triangle_free=triangle_free,
            max_delta=max_delta,
        )
        g = generate_kite_free(spec, max_attempts=config.generator_max_attempts)
        if dot:
            write_dot(dot, g)
    except Exception as exc:
        handle_cli_error(exc, config)
    _emit(format_graph(g), output)


if __name__ == "__main__":
    app()
