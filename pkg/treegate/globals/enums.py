"""
Global enumerations module for treegate.

This module contains the enumerations shared by the simulator, the
protocol builders and the command-line interface.

Enums:
    ProtocolKind: Non-local gate family (CH, CU)
    MeasurementBasis: Single-qubit measurement basis
    GateKind: Tag carried by single-qubit gates
    OpKind: Local operation vocabulary used in schedules and tables
    Numbering: Qubit numbering scheme for layouts
    NetworkShape: Rows of the resource comparison report
    MatchStatus: Outcome of a table row comparison
"""

from enum import Enum


class ProtocolKind(str, Enum):
    """Non-local gate families implemented over a rooted tree."""

    CH = "ch"
    CU = "cu"


class MeasurementBasis(str, Enum):
    """Measurement bases supported by the simulator."""

    COMPUTATIONAL = "computational"
    HADAMARD = "hadamard"


class GateKind(str, Enum):
    """Tags for single-qubit gates."""

    HERMITIAN_INVOLUTORY = "hermitian_involutory"
    UNITARY = "unitary"
    PAULI_X = "pauli_x"
    PAULI_Z = "pauli_z"
    HADAMARD = "hadamard"
    IDENTITY = "identity"


class OpKind(str, Enum):
    """
    Local operations appearing in schedules and correction tables.

    The order of declaration is the tie-break order used by the
    correction solver.
    """

    X = "sx"
    Z = "sz"
    CNOT = "CN"
    CZ = "CZ"
    CH = "CH"
    CU = "CU"


class Numbering(str, Enum):
    """Qubit numbering schemes."""

    FIVE_PARTY = "five-party"
    CANONICAL = "canonical"


class NetworkShape(str, Enum):
    """Network rows of the comparison report."""

    PARALLEL = "parallel"
    LINEAR = "linear"
    TREE = "rooted-tree"


class MatchStatus(str, Enum):
    """Result of comparing a generated table row with a fixture row."""

    MATCH = "MATCH"
    DIFF = "DIFF"
