"""
Base command module for the Command pattern.

Every action of a protocol step (local gate, measurement, classical
message, conditional correction) is a Command executed against the
running protocol's execution context.

Classes:
    Command: Abstract base class for all protocol actions
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from treegate.protocol.executor import ExecutionContext
    from treegate.protocol.schedule import ProtocolStep


class Command(ABC):
    """
    Abstract base class for protocol actions.

    Abstract Methods:
        execute(context, step): Runs the action for the step's actor
        describe(): One-line text used by schedules and transcripts
    """

    @abstractmethod
    def execute(self, context: ExecutionContext, step: ProtocolStep) -> None:
        """
        Executes the action.

        Args:
            context: Running execution context (state, inboxes, counters)
            step: Step carrying the action, its index and its actor
        """
        raise NotImplementedError(
            "The execute method must be implemented by subclasses"
        )

    @abstractmethod
    def describe(self) -> str:
        """Returns a one-line description of the action."""
        raise NotImplementedError(
            "The describe method must be implemented by subclasses"
        )
