# pylint: disable=import-error
"""
Tests for the protocol commands of the CLI.

Each command is invoked through Typer's CliRunner and checked on its
output and exit code (0 success, 1 verification failure, 2 configuration
error).
"""

import runpy

import pytest
from typer.testing import CliRunner

import treegate
from treegate.cli import app, main
from treegate.globals import ImpossibleBranchError
from treegate.protocol import load_transcript


@pytest.fixture
def runner():
    return CliRunner()


def test_cli_main_help(runner):
    """Test that the CLI help lists the protocol commands."""
    result = runner.invoke(app, ["--help"])
    assert result.exit_code == 0
    for name in ("run", "verify", "tables", "report", "schedule", "dot"):
        assert name in result.output


def test_cli_main_function():
    """The Poetry entry point is callable."""
    assert callable(main)


def test_cli_version(runner):
    """--version prints the configured name and version."""
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert result.output.strip() == f"treegate {treegate.__version__}"


def test_module_entry_point(mocker):
    """`python -m treegate` runs the CLI entry point."""
    run = mocker.patch("treegate.cli.main.app")
    runpy.run_module("treegate", run_name="__main__")
    run.assert_called_once_with()


class TestRun:
    """treegate run."""

    def test_default_run(self, runner):
        """Five-party CH with defaults matches every predicted counter."""
        result = runner.invoke(app, ["run"])
        assert result.exit_code == 0, result.output
        assert "ch protocol on 5 parties (h=2)" in result.output
        assert "(predicted 10)" in result.output
        assert "(predicted 4)" in result.output
        assert "MISMATCH" not in result.output

    def test_cu_run(self, runner):
        """CU reports 8 cbits and 13 steps."""
        result = runner.invoke(app, ["run", "--kind", "cu", "--gate", "random-unitary:3"])
        assert result.exit_code == 0, result.output
        assert "(predicted 8)" in result.output
        assert "(predicted 13)" in result.output

    def test_transcript_and_dot(self, runner, tmp_path, tree_file):
        """--out writes the transcript and --dot the graph."""
        out = tmp_path / "out"
        graph = tmp_path / "tree.dot"
        result = runner.invoke(
            app,
            [
                "run",
                "--tree",
                str(tree_file),
                "--state",
                "basis:30",
                "--policy",
                "forced:0101",
                "--out",
                str(out),
                "--dot",
                str(graph),
            ],
        )
        assert result.exit_code == 0, result.output
        data = load_transcript(out / "transcript.yaml")
        assert data["cbits"] == 10
        assert data["outcomes"]["4"] == 1
        assert graph.read_text(encoding="utf-8").startswith("digraph rooted_tree {")

    def test_identical_runs_write_identical_transcripts(self, runner, tmp_path):
        """A fixed seed gives a byte-identical transcript."""
        args = ["run", "--kind", "cu", "--gate", "x", "--policy", "sampled:5"]
        runner.invoke(app, [*args, "--out", str(tmp_path / "a")])
        runner.invoke(app, [*args, "--out", str(tmp_path / "b")])
        first = (tmp_path / "a" / "transcript.yaml").read_bytes()
        assert first == (tmp_path / "b" / "transcript.yaml").read_bytes()

    def test_enumerate_is_refused(self, runner):
        """run executes a single branch only."""
        result = runner.invoke(app, ["run", "--policy", "enumerate"])
        assert result.exit_code == 2
        assert "error:" in result.output

    def test_ch_with_general_unitary(self, runner):
        """CH refuses a non-Hermitian gate."""
        result = runner.invoke(app, ["run", "--gate", "random-unitary:1"])
        assert result.exit_code == 2
        assert "TG-5001" in result.output

    def test_too_many_forced_bits(self, runner):
        """More bits than measurements is a configuration error."""
        result = runner.invoke(app, ["run", "--policy", "forced:" + "0" * 9])
        assert result.exit_code == 2

    def test_counter_mismatch_exits_one(self, runner, mocker):
        """A measured counter off its prediction fails the run."""
        mocker.patch("treegate.cli.protocol_cmds.cbits", return_value=99)
        result = runner.invoke(app, ["run"])
        assert result.exit_code == 1
        assert "MISMATCH" in result.output

    def test_impossible_branch(self, runner, mocker):
        """An impossible forced branch is a configuration error."""
        mocker.patch(
            "treegate.cli.protocol_cmds.execute",
            side_effect=ImpossibleBranchError(2, 1, 0.0),
        )
        result = runner.invoke(app, ["run", "--policy", "forced:1"])
        assert result.exit_code == 2
        assert "error:" in result.output

    def test_bad_tree(self, runner, tmp_path):
        """Tree-spec errors cite the line."""
        spec = tmp_path / "cycle.tree"
        spec.write_text("root: T\nparty: A parent: B\nparty: B parent: A\n", encoding="utf-8")
        result = runner.invoke(app, ["run", "--tree", str(spec)])
        assert result.exit_code == 2
        assert "line" in result.output


class TestVerify:
    """treegate verify."""

    def test_ch_passes(self, runner):
        """Every five-party CH branch matches the reference."""
        result = runner.invoke(app, ["verify", "--gate", "random-hermitian:4"])
        assert result.exit_code == 0, result.output
        assert "branches: 256" in result.output
        assert "probability sum: 1.000000000000" in result.output
        assert "result: PASS" in result.output

    def test_cu_passes(self, runner):
        """Every five-party CU branch matches the reference."""
        result = runner.invoke(
            app, ["verify", "--kind", "cu", "--gate", "random-unitary:4", "--policy", "enumerate"]
        )
        assert result.exit_code == 0, result.output
        assert "result: PASS" in result.output
        assert "FAIL branch" not in result.output

    def test_failing_branches_exit_one(self, runner, mocker):
        """A wrong reference makes every branch fail."""
        mocker.patch(
            "treegate.cli.protocol_cmds.oracle_ch",
            side_effect=lambda state, layout, gate: state,
        )
        result = runner.invoke(app, ["verify", "--gate", "x", "--state", "basis:2"])
        assert result.exit_code == 1
        assert "FAIL branch" in result.output
        assert "result: FAIL" in result.output

    def test_single_branch_policy_refused(self, runner):
        """verify only enumerates."""
        result = runner.invoke(app, ["verify", "--policy", "sampled:1"])
        assert result.exit_code == 2


class TestTables:
    """treegate tables."""

    def test_diff_report(self, runner, tmp_path):
        """Five of seven tables match; generated rows all pass."""
        out = tmp_path / "diff.txt"
        result = runner.invoke(app, ["tables", "--seed", "7", "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert "5/7 tables match" in result.output
        assert out.read_text(encoding="utf-8") == result.stdout


class TestReport:
    """treegate report."""

    def test_text(self, runner):
        """Three rows for the five-party tree."""
        result = runner.invoke(app, ["report"])
        assert result.exit_code == 0
        assert "ch protocol, n=5, h=2" in result.output
        assert "rooted-tree" in result.output

    def test_csv_to_file(self, runner, tmp_path):
        """CSV output written to a file."""
        out = tmp_path / "report.csv"
        args = ["report", "--kind", "cu", "--format", "csv", "--out", str(out)]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "kind,network,n,h,ebits,cbits,steps,max_bell_pairs"
        assert lines[3] == "cu,rooted-tree,5,2,4,8,13,3"

    def test_unknown_format(self, runner):
        """Only text and csv are known."""
        result = runner.invoke(app, ["report", "--format", "json"])
        assert result.exit_code == 2
        assert "hint: text, csv" in result.output

    def test_unknown_kind(self, runner):
        """Protocol kinds are validated."""
        result = runner.invoke(app, ["report", "--kind", "cx"])
        assert result.exit_code == 2


class TestScheduleAndDot:
    """treegate schedule and treegate dot."""

    def test_schedule(self, runner):
        """The CU schedule of the five-party tree has 13 steps."""
        result = runner.invoke(app, ["schedule", "--kind", "cu", "--numbering", "five-party"])
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "cu schedule: 5 parties, 13 steps"

    def test_dot_stdout(self, runner, tree_file):
        """DOT goes to stdout without --out."""
        result = runner.invoke(app, ["dot", "--tree", str(tree_file)])
        assert result.exit_code == 0
        assert '"T" -> "S11"' in result.output

    def test_dot_file(self, runner, tmp_path):
        """DOT goes to the given file."""
        out = tmp_path / "graphs" / "tree.dot"
        result = runner.invoke(app, ["dot", "--out", str(out)])
        assert result.exit_code == 0
        assert out.read_text(encoding="utf-8").count("->") == 4
