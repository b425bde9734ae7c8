"""
CLI commands for running and checking the protocols.

Commands:
    run: Executes one branch and writes its transcript
    verify: Checks every branch against the reference gate
    tables: Regenerates the five-party tables and diffs them
    report: Parallel / linear / tree resource comparison
    schedule: Prints a step schedule
    dot: Exports the tree as a DOT graph
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Optional

import typer

from treegate.core.error_handling import create_validation_error, format_error_for_user
from treegate.core.logging_system import get_logger, log_context
from treegate.globals.enums import ProtocolKind
from treegate.globals.exceptions import TreegateError
from treegate.network import allocate_layout, export_dot, profile
from treegate.network.layout import QubitLayout
from treegate.network.tree import RootedTree
from treegate.oracle import (
    oracle_ch,
    oracle_cu,
    regenerate_tables,
    render_diff_report,
    verify_branch,
)
from treegate.protocol import (
    ProtocolSchedule,
    build_ch_schedule,
    build_cu_schedule,
    enumerate_branches,
    execute,
)
from treegate.resources import cbits, comparison_report, ebits, steps

from .main import (
    EXIT_CONFIGURATION_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    app,
)
from .options import (
    RunConfig,
    is_enumerate,
    load_run_config,
    parse_gate,
    parse_kind,
    parse_numbering,
    parse_policy,
    parse_state,
)

__all__ = [
    "ProtocolCommands",
    "run",
    "verify",
    "tables",
    "report",
    "schedule",
    "dot",
]

logger = get_logger(__name__)

TRANSCRIPT_FILE = "transcript.yaml"


@contextmanager
def cli_errors() -> Iterator[None]:
    """Turns package errors into a diagnostic and exit code 2."""
    try:
        yield
    except TreegateError as e:
        logger.error("command failed", error_code=e.error_code.value)
        typer.echo(f"error: {format_error_for_user(e)}", err=True)
        raise typer.Exit(EXIT_CONFIGURATION_ERROR) from e


def build_schedule(
    kind: ProtocolKind, tree: RootedTree, layout: QubitLayout
) -> ProtocolSchedule:
    if kind is ProtocolKind.CH:
        return build_ch_schedule(tree, layout)
    return build_cu_schedule(tree, layout)


class ProtocolCommands:
    """Implementations behind the Typer commands; each returns an exit code."""

    @staticmethod
    def run(settings: RunConfig) -> int:
        """Executes one branch, prints the resource summary, writes the transcript."""
        if is_enumerate(settings.policy):
            raise create_validation_error(
                "run executes a single branch",
                field_name="policy",
                field_value=settings.policy,
                suggestions=["use 'treegate verify' to enumerate branches"],
            )
        tree = settings.load_tree()
        layout = allocate_layout(tree, settings.numbering)
        schedule = build_schedule(settings.kind, tree, layout)
        gate = parse_gate(settings.gate)
        state = parse_state(settings.state, layout.input_labels())
        policy = parse_policy(settings.policy, schedule.measured_qubits())

        with log_context(kind=settings.kind.value, parties=tree.n):
            _, transcript = execute(schedule, state, gate, policy)

        tree_profile = profile(tree)
        predicted = {
            "ebits": ebits(tree_profile),
            "cbits": cbits(settings.kind, tree_profile),
            "steps": steps(settings.kind, tree_profile),
        }
        measured = {
            "ebits": transcript.ebits,
            "cbits": transcript.cbits,
            "steps": transcript.step_count,
        }
        typer.echo(
            f"{settings.kind.value} protocol on {tree.n} parties "
            f"(h={tree_profile.height})"
        )
        for name, value in measured.items():
            flag = "" if value == predicted[name] else "  MISMATCH"
            typer.echo(f"{name:<6} {value:>4}  (predicted {predicted[name]}){flag}")
        typer.echo(f"branch {transcript.pattern()}  probability {transcript.probability:.6g}")

        if settings.out is not None:
            path = transcript.write(settings.out / TRANSCRIPT_FILE)
            typer.echo(f"transcript written to {path}")
        if settings.dot is not None:
            ProtocolCommands.write_dot(tree, layout, settings.dot)
        return EXIT_OK if measured == predicted else EXIT_VERIFICATION_FAILED

    @staticmethod
    def verify(settings: RunConfig) -> int:
        """Runs every branch and compares it with the reference gate."""
        if settings.policy is not None and not is_enumerate(settings.policy):
            raise create_validation_error(
                "verify enumerates every branch",
                field_name="policy",
                field_value=settings.policy,
                suggestions=["--policy enumerate", "use 'treegate run' for one branch"],
            )
        tree = settings.load_tree()
        layout = allocate_layout(tree, settings.numbering)
        schedule = build_schedule(settings.kind, tree, layout)
        gate = parse_gate(settings.gate)
        state = parse_state(settings.state, layout.input_labels())
        if settings.kind is ProtocolKind.CH:
            reference = oracle_ch(state, layout, gate)
        else:
            reference = oracle_cu(state, layout, gate)

        branches = enumerate_branches(schedule, state, gate)
        verdicts = [verify_branch(branch.state, reference) for branch in branches]
        failing = [
            branch.transcript.pattern()
            for branch, verdict in zip(branches, verdicts)
            if not verdict.passed
        ]
        total = math.fsum(branch.probability for branch in branches)
        probabilities_ok = abs(total - 1.0) <= 1e-9

        typer.echo(f"branches: {len(branches)}")
        typer.echo(f"min fidelity: {min(v.fidelity for v in verdicts):.12f}")
        typer.echo(f"probability sum: {total:.12f}")
        for pattern in failing:
            typer.echo(f"FAIL branch {pattern}")
        passed = not failing and probabilities_ok
        typer.echo(f"result: {'PASS' if passed else 'FAIL'}")
        return EXIT_OK if passed else EXIT_VERIFICATION_FAILED

    @staticmethod
    def tables(settings: RunConfig, seed: int | None) -> int:
        """Prints the published-vs-generated table diff."""
        tree = settings.load_tree()
        comparisons = regenerate_tables(tree, seed)
        text = render_diff_report(comparisons)
        typer.echo(text, nl=False)
        if settings.out is not None:
            settings.out.parent.mkdir(parents=True, exist_ok=True)
            settings.out.write_text(text, encoding="utf-8")
        passing = all(c.generated_rows_pass for c in comparisons)
        return EXIT_OK if passing else EXIT_VERIFICATION_FAILED

    @staticmethod
    def report(settings: RunConfig, output_format: str) -> int:
        """Prints (or writes) the resource comparison."""
        if output_format not in ("text", "csv"):
            raise create_validation_error(
                f"unknown report format {output_format!r}",
                field_name="format",
                field_value=output_format,
                suggestions=["text", "csv"],
            )
        resource_report = comparison_report(settings.kind, settings.load_tree())
        text = resource_report.render() if output_format == "text" else resource_report.to_csv()
        if settings.out is not None:
            settings.out.parent.mkdir(parents=True, exist_ok=True)
            settings.out.write_text(text, encoding="utf-8")
            typer.echo(f"report written to {settings.out}")
        else:
            typer.echo(text, nl=False)
        return EXIT_OK

    @staticmethod
    def schedule(settings: RunConfig) -> int:
        tree = settings.load_tree()
        layout = allocate_layout(tree, settings.numbering)
        typer.echo(build_schedule(settings.kind, tree, layout).render(), nl=False)
        return EXIT_OK

    @staticmethod
    def write_dot(tree: RootedTree, layout: QubitLayout | None, path: Path | None) -> int:
        text = export_dot(tree, profile(tree), layout)
        if path is None:
            typer.echo(text, nl=False)
        else:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            typer.echo(f"graph written to {path}")
        return EXIT_OK


def _settings(config: Optional[Path], **overrides) -> RunConfig:
    if overrides.get("kind") is not None:
        overrides["kind"] = parse_kind(overrides["kind"])
    if overrides.get("numbering") is not None:
        overrides["numbering"] = parse_numbering(overrides["numbering"])
    return load_run_config(config).with_overrides(**overrides)


_TREE = typer.Option(None, "--tree", help="Tree-spec file (five-party tree if omitted)")
_KIND = typer.Option(None, "--kind", help="ch or cu")
_GATE = typer.Option(
    None,
    "--gate",
    help="identity|x|z|hadamard|random-unitary:SEED|random-hermitian:SEED|8 floats",
)
_STATE = typer.Option(None, "--state", help="zero|plus|basis:INDEX|random:SEED")
_NUMBERING = typer.Option(None, "--numbering", help="canonical or five-party")
_CONFIG = typer.Option(None, "--config", help="YAML run configuration")


@app.command()
def run(
    tree: Optional[Path] = _TREE,
    kind: Optional[str] = _KIND,
    gate: Optional[str] = _GATE,
    state: Optional[str] = _STATE,
    policy: Optional[str] = typer.Option(None, "--policy", help="sampled:SEED or forced:BITS"),
    numbering: Optional[str] = _NUMBERING,
    out: Optional[Path] = typer.Option(None, "--out", help="Directory for the transcript"),
    dot: Optional[Path] = typer.Option(None, "--dot", help="Write the tree as DOT"),
    config: Optional[Path] = _CONFIG,
):
    """Execute one branch of a protocol."""
    with cli_errors():
        settings = _settings(
            config,
            tree=tree,
            kind=kind,
            gate=gate,
            state=state,
            policy=policy,
            numbering=numbering,
            out=out,
            dot=dot,
        )
        code = ProtocolCommands.run(settings)
    raise typer.Exit(code)


@app.command()
def verify(
    tree: Optional[Path] = _TREE,
    kind: Optional[str] = _KIND,
    gate: Optional[str] = _GATE,
    state: Optional[str] = _STATE,
    policy: Optional[str] = typer.Option(None, "--policy", help="enumerate"),
    numbering: Optional[str] = _NUMBERING,
    config: Optional[Path] = _CONFIG,
):
    """Check every outcome branch against the reference gate."""
    with cli_errors():
        settings = _settings(
            config,
            tree=tree,
            kind=kind,
            gate=gate,
            state=state,
            policy=policy,
            numbering=numbering,
        )
        code = ProtocolCommands.verify(settings)
    raise typer.Exit(code)


@app.command()
def tables(
    tree: Optional[Path] = _TREE,
    seed: Optional[int] = typer.Option(None, "--seed", help="Witness-state seed"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the report here"),
    config: Optional[Path] = _CONFIG,
):
    """Regenerate the five-party correction tables and diff them."""
    with cli_errors():
        settings = _settings(config, tree=tree, out=out)
        code = ProtocolCommands.tables(settings, seed)
    raise typer.Exit(code)


@app.command()
def report(
    tree: Optional[Path] = _TREE,
    kind: Optional[str] = _KIND,
    output_format: str = typer.Option("text", "--format", help="text or csv"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output file"),
    config: Optional[Path] = _CONFIG,
):
    """Compare cbits and steps with the parallel and linear networks."""
    with cli_errors():
        settings = _settings(config, tree=tree, kind=kind, out=out)
        code = ProtocolCommands.report(settings, output_format)
    raise typer.Exit(code)


@app.command()
def schedule(
    tree: Optional[Path] = _TREE,
    kind: Optional[str] = _KIND,
    numbering: Optional[str] = _NUMBERING,
    config: Optional[Path] = _CONFIG,
):
    """Print the step schedule of a protocol."""
    with cli_errors():
        settings = _settings(config, tree=tree, kind=kind, numbering=numbering)
        code = ProtocolCommands.schedule(settings)
    raise typer.Exit(code)


@app.command()
def dot(
    tree: Optional[Path] = _TREE,
    numbering: Optional[str] = _NUMBERING,
    out: Optional[Path] = typer.Option(None, "--out", help="Output file"),
    config: Optional[Path] = _CONFIG,
):
    """Export the tree as a DOT graph."""
    with cli_errors():
        settings = _settings(config, tree=tree, numbering=numbering)
        rooted = settings.load_tree()
        layout = allocate_layout(rooted, settings.numbering)
        code = ProtocolCommands.write_dot(rooted, layout, out)
    raise typer.Exit(code)
