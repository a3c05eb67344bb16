"""Integration tests for the kitecolor CLI."""

import json

import pytest
from typer.testing import CliRunner

from src.adapters.inbound.cli import app
from src.adapters.outbound.formats import parse_coloring, parse_graph
from src.core.domain import ColoringMode
from tests.conftest import windmill_graph

pytestmark = pytest.mark.integration


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def cube_file(write_graph, cube):
    return write_graph(cube, "cube.graph")


@pytest.fixture
def windmill_file(write_graph):
    return write_graph(windmill_graph(5), "windmill.graph")


class TestStats:
    """Tests for the stats command."""

    def test_cube(self, runner, cube_file):
        result = runner.invoke(app, ["stats", "--graph", str(cube_file)])

        assert result.exit_code == 0
        assert result.stdout == (
            "n = 8\nedges = 12\nfaces = 6\nmax_degree = 3\nmin_degree = 3\nkites = 0\neuler = 2\n"
        )

    def test_dot_output(self, runner, cube_file, tmp_path):
        dot = tmp_path / "out" / "cube.dot"
        result = runner.invoke(app, ["stats", "--graph", str(cube_file), "--dot", str(dot)])

        assert result.exit_code == 0
        assert dot.read_text(encoding="utf-8").startswith("graph G {")

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(app, ["stats", "--graph", str(tmp_path / "nope.graph")])

        assert result.exit_code == 2

    def test_malformed_file(self, runner, tmp_path):
        path = tmp_path / "bad.graph"
        path.write_text("vertices 2\nrot 0 1\n", encoding="utf-8")
        result = runner.invoke(app, ["stats", "--graph", str(path)])

        assert result.exit_code == 2
        assert "KC_EMB_002" in result.output

    def test_non_plane_rotation_tagged_plane(self, runner, tmp_path):
        path = tmp_path / "k5.graph"
        rotations = "".join(
            f"rot {v}: {' '.join(str(u) for u in range(5) if u != v)}\n" for v in range(5)
        )
        path.write_text("vertices 5\n" + rotations, encoding="utf-8")
        result = runner.invoke(app, ["stats", "--graph", str(path)])

        assert result.exit_code == 2
        assert "KC_EMB_005" in result.output

    def test_debug_shows_details(self, runner, tmp_path):
        path = tmp_path / "bad.graph"
        path.write_text("rot 0: 1\n", encoding="utf-8")
        result = runner.invoke(app, ["--debug", "stats", "--graph", str(path)])

        assert result.exit_code == 2
        assert "Error Details" in result.output

    def test_invalid_global_option(self, runner, cube_file):
        result = runner.invoke(
            app, ["--oracle-max-elements", "0", "stats", "--graph", str(cube_file)]
        )

        assert result.exit_code == 2


class TestFindConfig:
    """Tests for the find-config command."""

    def test_theorem(self, runner, windmill_file):
        result = runner.invoke(
            app, ["find-config", "--graph", str(windmill_file), "--theorem", "t4", "--check"]
        )

        assert result.exit_code == 0
        assert result.stdout.startswith("lightedge ")
        assert "invalid" not in result.stdout

    def test_mode(self, runner, cube_file):
        result = runner.invoke(app, ["find-config", "--graph", str(cube_file), "--mode", "edge_d1"])

        assert result.exit_code == 0
        assert result.stdout.startswith("lightedge ")

    def test_none_found(self, runner, cube_file):
        result = runner.invoke(app, ["find-config", "--graph", str(cube_file), "--theorem", "t7"])

        assert result.exit_code == 1
        assert result.stdout == "none\n"

    def test_delta_below_graph_max_degree(self, runner, cube_file):
        result = runner.invoke(
            app,
            ["find-config", "--graph", str(cube_file), "--mode", "edge_d1", "--delta", "2"],
        )

        assert result.exit_code == 1
        assert "KC_COL_002" in result.output

    @pytest.mark.parametrize("flags", [[], ["--theorem", "t4", "--mode", "edge_d1"]])
    def test_needs_exactly_one_selector(self, runner, cube_file, flags):
        result = runner.invoke(app, ["find-config", "--graph", str(cube_file), *flags])

        assert result.exit_code == 2


class TestColoring:
    """Tests for color-edges, color-total and verify."""

    def test_color_then_verify(self, runner, windmill_file, tmp_path):
        coloring = tmp_path / "windmill.coloring"
        lists = tmp_path / "windmill.lists"
        result = runner.invoke(
            app,
            [
                "color-edges", "--graph", str(windmill_file),
                "--random-lists", "11", "--palette", "14", "--seed", "3",
                "--output", str(coloring), "--lists-out", str(lists),
            ],
        )  # fmt: skip

        assert result.exit_code == 0
        assert len(parse_coloring(coloring.read_text(), ColoringMode.EDGE).edge_color) == 15

        verified = runner.invoke(
            app,
            ["verify", "--graph", str(windmill_file), "--coloring", str(coloring),
             "--lists", str(lists)],
        )  # fmt: skip
        assert verified.exit_code == 0
        assert verified.stdout == "ok\n"

    def test_verify_reports_violations(self, runner, cube_file, tmp_path):
        coloring = tmp_path / "bad.coloring"
        coloring.write_text("edge 0 1 = 0\nedge 0 3 = 0\n", encoding="utf-8")
        lists = tmp_path / "cube.lists"
        lists.write_text(
            "".join(f"edgelist {u} {v}: 0 1 2 3\n" for u, v in parse_graph(
                cube_file.read_text()).edges()),
            encoding="utf-8",
        )
        result = runner.invoke(
            app,
            ["verify", "--graph", str(cube_file), "--coloring", str(coloring),
             "--lists", str(lists)],
        )  # fmt: skip

        assert result.exit_code == 1
        assert "violation adjacent_edges 0-1 0-3 color=0" in result.stdout
        assert "violation uncolored 0-4" in result.stdout

    def test_oracle_engine(self, runner, cube_file):
        result = runner.invoke(
            app,
            ["color-edges", "--graph", str(cube_file), "--uniform", "3", "--engine", "oracle"],
        )

        assert result.exit_code == 0
        assert result.stdout.count("edge ") == 12

    def test_lists_too_short(self, runner, cube_file):
        result = runner.invoke(app, ["color-edges", "--graph", str(cube_file), "--uniform", "3"])

        assert result.exit_code == 1
        assert "KC_COL_002" in result.output

    def test_two_list_sources(self, runner, cube_file):
        result = runner.invoke(
            app,
            ["color-edges", "--graph", str(cube_file), "--uniform", "4", "--random-lists", "4"],
        )

        assert result.exit_code == 2

    def test_total(self, runner, windmill_file):
        result = runner.invoke(
            app, ["color-total", "--graph", str(windmill_file), "--uniform", "12"]
        )

        assert result.exit_code == 0
        coloring = parse_coloring(result.stdout, ColoringMode.TOTAL)
        assert len(coloring.edge_color) == 15
        assert len(coloring.vertex_color) == 11

    def test_guarantee_outside_mode(self, runner, windmill_file):
        result = runner.invoke(
            app,
            ["color-total", "--graph", str(windmill_file), "--uniform", "12",
             "--guarantee", "delta"],
        )  # fmt: skip

        assert result.exit_code == 2

    def test_json_log_file(self, runner, windmill_file, tmp_path):
        log_file = tmp_path / "logs" / "run.jsonl"
        result = runner.invoke(
            app,
            ["--log-level", "INFO", "--log-json", "--log-file", str(log_file),
             "color-edges", "--graph", str(windmill_file), "--uniform", "11"],
        )  # fmt: skip

        assert result.exit_code == 0
        records = [json.loads(line) for line in log_file.read_text().splitlines()]
        assert any(r["message"].startswith("Peeled") for r in records)
        assert all(r["level"] in {"INFO", "WARNING"} for r in records)


class TestAudit:
    """Tests for the audit command."""

    def test_t7(self, runner, windmill_file):
        result = runner.invoke(app, ["audit", "--graph", str(windmill_file), "--rules", "t7"])

        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "ruleset = T7"
        assert "charge v 0 = -7/6" in lines
        assert "bank = -12/1" in lines
        assert "total = -8/1" in lines

    def test_unknown_rules(self, runner, windmill_file):
        result = runner.invoke(app, ["audit", "--graph", str(windmill_file), "--rules", "t9"])

        assert result.exit_code == 2


class TestGenerate:
    """Tests for the generate command."""

    def test_small(self, runner):
        result = runner.invoke(app, ["generate", "--n", "4"])

        assert result.exit_code == 0
        assert parse_graph(result.stdout).edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]

    def test_files(self, runner, tmp_path):
        output, dot = tmp_path / "g.graph", tmp_path / "g.dot"
        result = runner.invoke(
            app,
            ["generate", "--n", "30", "--seed", "9", "--triangle-free",
             "--output", str(output), "--dot", str(dot)],
        )  # fmt: skip

        assert result.exit_code == 0
        assert parse_graph(output.read_text()).n == 30
        assert dot.exists()

    def test_invalid_spec(self, runner):
        result = runner.invoke(app, ["generate", "--n", "2"])

        assert result.exit_code == 2
        assert "KC_VAL_002" in result.output


@pytest.mark.slow
class TestPipeline:
    """Generate, color and verify larger graphs end to end."""

    @pytest.mark.parametrize(
        ("command", "guarantee", "extra"),
        [
            ("color-edges", "delta_plus_1", 1),
            ("color-edges", "delta", 0),
            ("color-total", "delta_plus_2", 2),
            ("color-total", "delta_plus_1", 1),
        ],
    )
    def test_generated_graph(self, runner, tmp_path, command, guarantee, extra):
        graph = tmp_path / "big.graph"
        generated = runner.invoke(
            app,
            ["generate", "--n", "400", "--seed", "17", "--min-delta", "12",
             "--output", str(graph)],
        )  # fmt: skip
        assert generated.exit_code == 0
        delta = parse_graph(graph.read_text()).max_degree()
        if delta < 9:
            pytest.skip(f"generated max degree {delta} is below 9")

        k = delta + extra
        coloring, lists = tmp_path / "out.coloring", tmp_path / "out.lists"
        colored = runner.invoke(
            app,
            [command, "--graph", str(graph), "--random-lists", str(k),
             "--palette", str(k + 4), "--seed", "5", "--guarantee", guarantee,
             "--output", str(coloring), "--lists-out", str(lists)],
        )  # fmt: skip
        assert colored.exit_code == 0

        mode = "edge" if command == "color-edges" else "total"
        verified = runner.invoke(
            app,
            ["verify", "--graph", str(graph), "--coloring", str(coloring),
             "--lists", str(lists), "--mode", mode],
        )  # fmt: skip
        assert verified.exit_code == 0
