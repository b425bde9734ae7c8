"""
Protocol actions following the Command pattern.

Exposed Classes:
    Command: Abstract base class for all protocol actions
    LocalGate: Unconditional local gate
    Measure: Single-qubit measurement
    ClassicalSend: Outcome broadcast to recipients
    ConditionalCorrection: Outcome-driven local corrections
"""

from .classical_send import ClassicalSend
from .command import Command
from .conditional_correction import ConditionalCorrection
from .local_gate import LocalGate
from .measure import Measure

__all__ = [
    "Command",
    "LocalGate",
    "Measure",
    "ClassicalSend",
    "ConditionalCorrection",
]
