"""
End-to-End (E2E) Tests for complete CLI workflows.

These tests drive the command-line interface the way a user would: a
tree spec on disk, a run configuration, then the commands one after
the other, checking the files they leave behind.

Test Coverage:
    - Tree spec -> schedule -> run -> verify on a custom tree
    - Run configuration files shared across commands
    - Report and DOT exports
    - Error recovery: a bad command does not spoil the next one
"""

# pylint: disable=redefined-outer-name

import pytest
from typer.testing import CliRunner

from treegate.cli import app
from treegate.protocol import load_transcript

pytestmark = pytest.mark.e2e


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def workspace(tmp_path):
    """A six-party tree spec and a run configuration pointing at it."""
    tree = tmp_path / "six.tree"
    tree.write_text(
        "# six parties, height 3\n"
        "root: T\n"
        "party: A parent: T\n"
        "party: B parent: T\n"
        "party: C parent: A\n"
        "party: D parent: C\n"
        "party: E parent: A\n",
        encoding="utf-8",
    )
    config = tmp_path / "run.yaml"
    config.write_text(
        f"tree: {tree}\nkind: ch\ngate: random-hermitian:11\nstate: random:5\n",
        encoding="utf-8",
    )
    return tmp_path, tree, config


class TestCustomTreeWorkflow:
    """A user-supplied tree from schedule to verification."""

    def test_full_workflow(self, runner, workspace):
        """schedule, run, verify and report agree on the six-party tree."""
        root, _, config = workspace

        result = runner.invoke(app, ["schedule", "--config", str(config)])
        assert result.exit_code == 0
        # h = 3: 3h + 4 steps
        assert result.output.splitlines()[0] == "ch schedule: 6 parties, 13 steps"

        out = root / "results"
        result = runner.invoke(app, ["run", "--config", str(config), "--out", str(out)])
        assert result.exit_code == 0, result.output
        transcript = load_transcript(out / "transcript.yaml")
        # n_1 = 2, n_2 = 2, n_3 = 1: 2*2 + 2*3 + 1*4
        assert transcript["cbits"] == 14
        assert transcript["ebits"] == 5
        assert transcript["steps"] == 13

        result = runner.invoke(app, ["verify", "--config", str(config)])
        assert result.exit_code == 0, result.output
        assert "result: PASS" in result.output

        result = runner.invoke(app, ["report", "--config", str(config), "--format", "csv"])
        assert result.exit_code == 0
        assert "ch,rooted-tree,6,3,5,14,13,3" in result.output

    def test_cu_on_the_same_tree(self, runner, workspace):
        """Overriding the kind runs CU with 2(n-1) cbits."""
        _, _, config = workspace
        result = runner.invoke(
            app,
            ["verify", "--config", str(config), "--kind", "cu", "--gate", "random-unitary:2"],
        )
        assert result.exit_code == 0, result.output
        result = runner.invoke(
            app, ["run", "--config", str(config), "--kind", "cu", "--gate", "x"]
        )
        assert result.exit_code == 0
        assert "cbits    10  (predicted 10)" in result.output

    def test_dot_export(self, runner, workspace):
        """The tree exports with one edge per control party."""
        root, tree, _ = workspace
        out = root / "tree.dot"
        result = runner.invoke(app, ["dot", "--tree", str(tree), "--out", str(out)])
        assert result.exit_code == 0
        text = out.read_text(encoding="utf-8")
        assert text.count("->") == 5
        assert '"C" -> "D"' in text


class TestFivePartyWorkflow:
    """The built-in five-party tree."""

    def test_tables_then_report(self, runner, tmp_path):
        """The diff report and the comparison both come out of the defaults."""
        diff = tmp_path / "tables.txt"
        result = runner.invoke(app, ["tables", "--out", str(diff)])
        assert result.exit_code == 0
        assert diff.read_text(encoding="utf-8").endswith("5/7 tables match\n")

        result = runner.invoke(app, ["report", "--kind", "cu"])
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "cu protocol, n=5, h=2 (n_1=2, n_2=2)"


class TestErrorRecovery:
    """Failures are reported and leave no trace on the next command."""

    def test_bad_then_good(self, runner, tmp_path):
        """A broken tree spec exits 2; the next command runs normally."""
        broken = tmp_path / "broken.tree"
        broken.write_text("root: T\nparty: A\n", encoding="utf-8")
        result = runner.invoke(app, ["run", "--tree", str(broken)])
        assert result.exit_code == 2
        assert "TG-3000" in result.output

        result = runner.invoke(app, ["run"])
        assert result.exit_code == 0

    def test_missing_tree_file(self, runner, tmp_path):
        """A missing tree file is a configuration error."""
        result = runner.invoke(app, ["schedule", "--tree", str(tmp_path / "absent.tree")])
        assert result.exit_code == 2
