"""
Command applying a table-driven correction.

Classes:
    ConditionalCorrection: Row lookup on received outcomes
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .command import Command

if TYPE_CHECKING:
    from treegate.protocol.executor import ExecutionContext
    from treegate.protocol.operations import CorrectionTable
    from treegate.protocol.schedule import ProtocolStep


@dataclass(frozen=True, slots=True)
class ConditionalCorrection(Command):
    """Applies the table row selected by the outcomes the actor received."""

    table: CorrectionTable

    def execute(self, context: ExecutionContext, step: ProtocolStep) -> None:
        operations = self.table.lookup(context.inbox(step.actor))
        context.apply_operations(operations)
        rendered = " ".join(op.render() for op in operations) or "I"
        context.log(step, "correction", rendered)

    def describe(self) -> str:
        keys = ",".join(map(str, self.table.keys))
        return f"correct on outcomes of {{{keys}}}"
