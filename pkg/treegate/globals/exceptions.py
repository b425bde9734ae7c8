"""
Custom exceptions module for treegate.

Every error carries a stable ``TG-xxxx`` code whose thousands digit
names the subsystem, and an ErrorContext recording where it was raised.

Exceptions:
    TreegateError: Base exception for all errors
    SimulationError: Statevector engine errors
    ImpossibleBranchError: Forced outcome with zero probability
    TreeError: Tree-spec parsing and structural errors
    ValidationError: Input validation errors
    ProtocolError: Schedule construction and execution errors
    SolverError: Correction solver failures
"""

from __future__ import annotations

import os
import sys
import traceback
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, ClassVar

_THIS_MODULE = os.path.realpath(__file__)


class ErrorCode(str, Enum):
    """Stable error codes; 1xxx generic, then one block per subsystem."""

    UNKNOWN_ERROR = "TG-1000"
    INVALID_CONFIGURATION = "TG-1001"

    # qsim
    QSIM_INDEX_OUT_OF_RANGE = "TG-2000"
    QSIM_DUPLICATE_LABEL = "TG-2001"
    QSIM_UNKNOWN_LABEL = "TG-2002"
    QSIM_LABEL_COLLISION = "TG-2003"
    QSIM_EMPTY_CONTROLS = "TG-2004"
    QSIM_NOT_UNITARY = "TG-2005"
    QSIM_IMPOSSIBLE_BRANCH = "TG-2006"
    QSIM_ENTANGLED_RETIREMENT = "TG-2007"
    QSIM_LABEL_MISMATCH = "TG-2008"

    # network
    TREE_PARSE_ERROR = "TG-3000"
    TREE_CYCLE = "TG-3001"
    TREE_DISCONNECTED = "TG-3002"
    TREE_DUPLICATE_PARTY = "TG-3003"
    TREE_MISSING_ROOT = "TG-3004"
    LAYOUT_NUMBERING_MISMATCH = "TG-3005"

    # user input
    VALIDATION_REQUIRED_FIELD = "TG-4000"
    VALIDATION_INVALID_FORMAT = "TG-4001"
    VALIDATION_OUT_OF_RANGE = "TG-4002"

    # protocol
    PROTOCOL_TOO_FEW_PARTIES = "TG-5000"
    PROTOCOL_GATE_KIND_MISMATCH = "TG-5001"
    PROTOCOL_INPUT_MISMATCH = "TG-5002"
    PROTOCOL_MISSING_MESSAGE = "TG-5003"
    PROTOCOL_INVALID_SCHEDULE = "TG-5004"

    # oracle
    SOLVER_NO_SOLUTION = "TG-6000"
    SOLVER_INCONSISTENT_RULE = "TG-6001"


@dataclass(slots=True, frozen=True)
class ErrorContext:
    """
    Where an error was raised, plus data for the user or for debugging.

    ``user_data["suggestions"]`` is shown as a hint by the CLI.
    """

    timestamp: datetime = field(default_factory=datetime.now)
    module: str | None = None
    function: str | None = None
    line_number: int | None = None
    user_data: dict[str, Any] = field(default_factory=dict)
    system_data: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_active_exception(cls) -> ErrorContext | None:
        """Innermost frame of the exception being handled, if any."""
        tb = sys.exc_info()[2]
        if tb is None:
            return None
        for frame in reversed(traceback.extract_tb(tb)):
            if os.path.realpath(frame.filename) != _THIS_MODULE:
                return cls(
                    module=frame.filename, function=frame.name, line_number=frame.lineno
                )
        return None


class TreegateError(Exception):
    """
    Base exception for all treegate errors.

    Subclasses set ``default_code``; an explicit ``error_code`` wins.
    Raised inside an ``except`` block, the context points at the frame
    of the exception being handled.
    """

    default_code: ClassVar[ErrorCode] = ErrorCode.UNKNOWN_ERROR

    def __init__(
        self,
        message: str,
        error_code: ErrorCode | None = None,
        context: ErrorContext | None = None,
        cause: Exception | None = None,
    ) -> None:
        super().__init__(message)
        self.error_code = error_code or self.default_code
        self.context = context or ErrorContext.from_active_exception() or ErrorContext()
        self.cause = cause

    def to_dict(self) -> dict[str, Any]:
        return {
            "error_code": self.error_code.value,
            "message": str(self),
            "timestamp": self.context.timestamp.isoformat(),
            "module": self.context.module,
            "function": self.context.function,
            "line_number": self.context.line_number,
            "user_data": self.context.user_data,
            "system_data": self.context.system_data,
            "cause": str(self.cause) if self.cause else None,
        }

    def __str__(self) -> str:
        return f"[{self.error_code.value}] {super().__str__()}"


class SimulationError(TreegateError):
    """Statevector engine errors; ``qubit`` is the offending label."""

    default_code = ErrorCode.QSIM_UNKNOWN_LABEL

    def __init__(
        self,
        message: str,
        qubit: Any = None,
        error_code: ErrorCode | None = None,
        context: ErrorContext | None = None,
        cause: Exception | None = None,
    ) -> None:
        super().__init__(message, error_code, context, cause)
        self.qubit = qubit


class ImpossibleBranchError(SimulationError):
    """A forced outcome whose probability is below the cutoff."""

    default_code = ErrorCode.QSIM_IMPOSSIBLE_BRANCH

    def __init__(self, qubit: Any, outcome: int, probability: float) -> None:
        super().__init__(
            f"Impossible branch: outcome {outcome} on qubit {qubit} "
            f"has probability {probability:.3e}",
            qubit=qubit,
        )
        self.outcome = outcome
        self.probability = probability


class TreeError(TreegateError):
    """Tree-spec errors; the message is prefixed with the line when known."""

    default_code = ErrorCode.TREE_PARSE_ERROR

    def __init__(
        self,
        message: str,
        line_number: int | None = None,
        error_code: ErrorCode | None = None,
        context: ErrorContext | None = None,
        cause: Exception | None = None,
    ) -> None:
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message, error_code, context, cause)
        self.line_number = line_number


class ValidationError(TreegateError):
    """Bad user input: command-line values, run files, operation text."""

    default_code = ErrorCode.VALIDATION_REQUIRED_FIELD

    def __init__(
        self,
        message: str,
        field_name: str | None = None,
        field_value: Any = None,
        error_code: ErrorCode | None = None,
        context: ErrorContext | None = None,
        cause: Exception | None = None,
    ) -> None:
        super().__init__(message, error_code, context, cause)
        self.field_name = field_name
        self.field_value = field_value


class ProtocolError(TreegateError):
    """Schedule construction and execution errors."""

    default_code = ErrorCode.PROTOCOL_INVALID_SCHEDULE

    def __init__(
        self,
        message: str,
        step_index: int | None = None,
        error_code: ErrorCode | None = None,
        context: ErrorContext | None = None,
        cause: Exception | None = None,
    ) -> None:
        super().__init__(message, error_code, context, cause)
        self.step_index = step_index


class SolverError(TreegateError):
    """No correction in the dictionary reproduces the reference state."""

    default_code = ErrorCode.SOLVER_NO_SOLUTION


def unknown_qubit(qubit: Any, live: Any = None) -> SimulationError:
    """SimulationError for a label that is not live in a state."""
    message = f"Qubit {qubit!r} is not live in the state"
    if live is not None:
        message += f" (live: {list(live)})"
    return SimulationError(message, qubit=qubit)


def validation_failed(
    field_name: str, field_value: Any, reason: str = ""
) -> ValidationError:
    """
    ValidationError for a malformed value.

    Example:
        raise validation_failed("bit", 3, "forced outcome must be 0 or 1")
    """
    message = f"Validation failed for field '{field_name}'"
    if reason:
        message += f": {reason}"
    return ValidationError(
        message,
        field_name=field_name,
        field_value=field_value,
        error_code=ErrorCode.VALIDATION_INVALID_FORMAT,
    )
