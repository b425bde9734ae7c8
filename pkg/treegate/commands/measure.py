"""
Command measuring one qubit.

Classes:
    Measure: Computational or Hadamard-basis measurement
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from treegate.globals.enums import MeasurementBasis
from treegate.qsim import measure, retire_qubit

from .command import Command

if TYPE_CHECKING:
    from treegate.protocol.executor import ExecutionContext
    from treegate.protocol.schedule import ProtocolStep


@dataclass(frozen=True, slots=True)
class Measure(Command):
    """Measures a qubit held by the actor; the qubit is retired when enabled."""

    qubit: int
    basis: MeasurementBasis

    def execute(self, context: ExecutionContext, step: ProtocolStep) -> None:
        record, state = measure(context.state, self.qubit, self.basis, context.policy)
        if context.retire:
            state = retire_qubit(state, self.qubit)
        context.state = state
        context.record_measurement(step, record)

    def describe(self) -> str:
        return f"measure {self.qubit} ({self.basis.value})"
