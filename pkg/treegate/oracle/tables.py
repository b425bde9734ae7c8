"""
Regeneration of the five-party correction tables and diff against the
published fixtures.

Every generated row is compared with the published one and flagged
MATCH or DIFF. For the Hadamard-stage tables (pure phase corrections)
both rows are also applied to a seeded witness on their branch, so each
DIFF comes with the fidelity of the published row and of the generated
alternative.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from treegate.core.config import FIDELITY_TOLERANCE, get_config
from treegate.core.logging_system import get_logger
from treegate.globals.enums import MatchStatus, MeasurementBasis, Numbering, ProtocolKind
from treegate.network.layout import QubitLayout, allocate_layout
from treegate.network.shapes import five_party_tree
from treegate.network.tree import RootedTree, profile
from treegate.protocol.executor import execute
from treegate.protocol.fixtures import fixture_tables
from treegate.protocol.operations import (
    CorrectionTable,
    Operation,
    Pattern,
    all_patterns,
    apply_operations,
    render_operations,
)
from treegate.protocol.schedule import (
    ProtocolSchedule,
    build_ch_schedule,
    build_cu_schedule,
)
from treegate.qsim import (
    ForcedAssignment,
    Gate1Q,
    StateVector,
    random_hermitian_involutory,
    random_state,
    random_unitary,
)

from .reference import oracle_ch, stage_reference, verify_branch

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class RowComparison:
    """One outcome pattern of a table, published vs. generated."""

    pattern: Pattern
    rendered_pattern: str
    published: tuple[Operation, ...]
    generated: tuple[Operation, ...]
    published_fidelity: float | None = None
    generated_fidelity: float | None = None

    @property
    def status(self) -> MatchStatus:
        return MatchStatus.MATCH if self.published == self.generated else MatchStatus.DIFF


@dataclass(frozen=True, slots=True)
class TableComparison:
    """A published table next to its regenerated counterpart."""

    name: str
    published: CorrectionTable
    generated: CorrectionTable
    rows: tuple[RowComparison, ...]

    @property
    def status(self) -> MatchStatus:
        if all(row.status is MatchStatus.MATCH for row in self.rows):
            return MatchStatus.MATCH
        return MatchStatus.DIFF

    @property
    def generated_rows_pass(self) -> bool:
        """Generated rows all verified (or not evaluated on a witness)."""
        return all(
            row.generated_fidelity is None or row.generated_fidelity >= 1.0 - FIDELITY_TOLERANCE
            for row in self.rows
        )


def regenerate_tables(
    tree: RootedTree | None = None, seed: int | None = None
) -> list[TableComparison]:
    """
    Builds both five-party schedules and compares their correction stages
    with the published tables.

    Raises:
        TreeError: If the tree is not of the five-party shape
    """
    tree = tree or five_party_tree()
    layout = allocate_layout(tree, Numbering.FIVE_PARTY)
    if seed is None:
        seed = get_config().simulation.default_seed
    rng = np.random.default_rng(seed)
    witness = random_state(layout.input_labels(), rng)
    gates = {
        ProtocolKind.CH: random_hermitian_involutory(rng),
        ProtocolKind.CU: random_unitary(rng),
    }
    schedules = {
        ProtocolKind.CH: build_ch_schedule(tree, layout),
        ProtocolKind.CU: build_cu_schedule(tree, layout),
    }

    comparisons = []
    for name, published in fixture_tables().items():
        schedule = schedules[published.kind]
        generated = schedule.correction_tables(published.stage)
        rows = []
        for pattern in all_patterns(len(published.keys)):
            outcomes = dict(zip(published.keys, pattern))
            published_ops = published.rows[pattern]
            generated_ops = generated.lookup(outcomes)
            fidelities: tuple[float | None, float | None] = (None, None)
            if published.basis is MeasurementBasis.HADAMARD:
                fidelities = _evaluate_rows(
                    schedule,
                    layout,
                    witness,
                    gates[published.kind],
                    published,
                    outcomes,
                    (published_ops, generated_ops),
                )
            rows.append(
                RowComparison(
                    pattern,
                    published.render_pattern(pattern),
                    published_ops,
                    generated_ops,
                    *fidelities,
                )
            )
        comparison = TableComparison(name, published, generated, tuple(rows))
        logger.info("table compared", table=name, status=comparison.status.value)
        comparisons.append(comparison)
    return comparisons


def _evaluate_rows(
    schedule: ProtocolSchedule,
    layout: QubitLayout,
    witness: StateVector,
    gate: Gate1Q,
    table: CorrectionTable,
    outcomes: dict[int, int],
    candidates: Sequence[tuple[Operation, ...]],
) -> tuple[float, ...]:
    """Applies each candidate row on the branch and scores it against the reference."""
    if table.kind is ProtocolKind.CH:
        reference = oracle_ch(witness, layout, gate)
    else:
        depth = profile(layout.tree).depths[table.actors[0]]
        reference = stage_reference(witness, layout, gate, depth)

    state, _ = execute(
        schedule.prefix(table.stage), witness, gate, ForcedAssignment(outcomes), retire=True
    )
    return tuple(
        verify_branch(apply_operations(state, ops), reference).fidelity for ops in candidates
    )


def render_diff_report(comparisons: Sequence[TableComparison]) -> str:
    """
    Plain-text diff report, one block per table.

    Example line:
        |-+>_{11,12}  published: CZ^7_{5,6} sz^9  generated: CZ^7_{5,6}  DIFF
    """
    lines: list[str] = []
    for comparison in comparisons:
        table = comparison.published
        lines.append(
            f"table {comparison.name}  {table.kind.value} step {table.stage}  "
            f"({', '.join(table.actors)})  {comparison.status.value}"
        )
        width = max(len(row.rendered_pattern) for row in comparison.rows)
        for row in comparison.rows:
            line = (
                f"  {row.rendered_pattern:<{width}}  "
                f"published: {render_operations(row.published)}  "
                f"generated: {render_operations(row.generated)}  {row.status.value}"
            )
            if row.published_fidelity is not None and row.generated_fidelity is not None:
                line += (
                    f"  fidelity published={row.published_fidelity:.6f}"
                    f" generated={row.generated_fidelity:.6f}"
                )
            lines.append(line)
        lines.append("")
    matched = sum(c.status is MatchStatus.MATCH for c in comparisons)
    lines.append(f"{matched}/{len(comparisons)} tables match")
    return "\n".join(lines) + "\n"
