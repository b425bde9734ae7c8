"""
Global elements of treegate.

Exposed Enums:
    ProtocolKind, MeasurementBasis, GateKind, OpKind, Numbering,
    NetworkShape, MatchStatus

Exposed Exceptions:
    TreegateError, SimulationError, ImpossibleBranchError, TreeError,
    ValidationError, ProtocolError, SolverError, ErrorCode, ErrorContext
"""

from .enums import (
    GateKind,
    MatchStatus,
    MeasurementBasis,
    NetworkShape,
    Numbering,
    OpKind,
    ProtocolKind,
)
from .exceptions import (
    ErrorCode,
    ErrorContext,
    ImpossibleBranchError,
    ProtocolError,
    SimulationError,
    SolverError,
    TreeError,
    TreegateError,
    ValidationError,
)

__all__ = [
    # Enums
    "ProtocolKind",
    "MeasurementBasis",
    "GateKind",
    "OpKind",
    "Numbering",
    "NetworkShape",
    "MatchStatus",
    # Exceptions
    "TreegateError",
    "SimulationError",
    "ImpossibleBranchError",
    "TreeError",
    "ValidationError",
    "ProtocolError",
    "SolverError",
    "ErrorCode",
    "ErrorContext",
]
