"""
Command applying an unconditional local gate.

Classes:
    LocalGate: Gate applied by a party on its own qubits
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .command import Command

if TYPE_CHECKING:
    from treegate.protocol.executor import ExecutionContext
    from treegate.protocol.operations import Operation
    from treegate.protocol.schedule import ProtocolStep


@dataclass(frozen=True, slots=True)
class LocalGate(Command):
    """Local gate, e.g. a leaf's CN^2_1."""

    operation: Operation

    def execute(self, context: ExecutionContext, step: ProtocolStep) -> None:
        context.apply_operations((self.operation,))
        context.log(step, "gate", self.operation.render())

    def describe(self) -> str:
        return self.operation.render()
