"""
Command sending a measurement outcome.

Classes:
    ClassicalSend: One cbit per recipient
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from treegate.network.tree import PartyId

from .command import Command

if TYPE_CHECKING:
    from treegate.protocol.executor import ExecutionContext
    from treegate.protocol.schedule import ProtocolStep


@dataclass(frozen=True, slots=True)
class ClassicalSend(Command):
    """Sends the outcome of a qubit the actor measured."""

    qubit: int
    recipients: tuple[PartyId, ...]

    def execute(self, context: ExecutionContext, step: ProtocolStep) -> None:
        context.deliver(step, self.qubit, self.recipients)

    def describe(self) -> str:
        return f"send {self.qubit} -> {', '.join(self.recipients)}"
