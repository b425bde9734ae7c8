"""
Local operations and correction tables.

An Operation is one local gate named the way the correction tables
write it: "sx^5", "sz^9", "CN^8_{5,6,7}", "CZ^7_{5,6}", "CH^13_11",
"CU^13_{11,12}". A CorrectionTable maps the outcome pattern of a set of
measured qubits to the operation list a party applies; lists are read
right to left, so the last operation is applied first.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType

from treegate.globals.enums import MeasurementBasis, OpKind, ProtocolKind
from treegate.globals.exceptions import ErrorCode, ProtocolError, validation_failed
from treegate.network.tree import PartyId
from treegate.qsim import (
    Gate1Q,
    StateVector,
    apply_1q,
    apply_controlled,
    pauli_x,
    pauli_z,
)

Pattern = tuple[int, ...]

_KIND_ORDER = {kind: position for position, kind in enumerate(OpKind)}
_DIAGONAL = frozenset({OpKind.Z, OpKind.CZ})
_OPERATION_TEXT = re.compile(
    r"^(?P<kind>sx|sz|CN|CZ|CH|CU)\^(?P<target>\d+)"
    r"(?:_(?:\{(?P<many>\d+(?:,\d+)*)\}|(?P<one>\d+)))?$"
)
_X = pauli_x()
_Z = pauli_z()


@dataclass(frozen=True, slots=True)
class Operation:
    """One local gate; controls are empty for single-qubit Paulis."""

    kind: OpKind
    target: int
    controls: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        controlled = self.kind not in (OpKind.X, OpKind.Z)
        if controlled != bool(self.controls):
            raise validation_failed(
                "controls",
                self.controls,
                f"{self.kind.value} takes {'some' if controlled else 'no'} controls",
            )
        object.__setattr__(self, "controls", tuple(self.controls))

    @property
    def is_diagonal(self) -> bool:
        return self.kind in _DIAGONAL

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls + (self.target,)

    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        """Order used for diagonal rows and the solver's tie-break."""
        return (self.target, _KIND_ORDER[self.kind], self.controls)

    def render(self) -> str:
        text = f"{self.kind.value}^{self.target}"
        if len(self.controls) == 1:
            text += f"_{self.controls[0]}"
        elif self.controls:
            text += "_{" + ",".join(map(str, self.controls)) + "}"
        return text

    def __str__(self) -> str:
        return self.render()


def parse_operation(text: str) -> Operation:
    """Parses the rendered form of an operation."""
    match = _OPERATION_TEXT.match(text.strip())
    if match is None:
        raise validation_failed("operation", text, "expected e.g. sx^5 or CN^8_{5,6}")
    if match["many"]:
        controls = tuple(int(c) for c in match["many"].split(","))
    elif match["one"]:
        controls = (int(match["one"]),)
    else:
        controls = ()
    return Operation(OpKind(match["kind"]), int(match["target"]), controls)


def parse_operations(text: str) -> tuple[Operation, ...]:
    """Parses a space-separated operation list; "I" is the empty list."""
    words = text.split()
    if words in ([], ["I"]):
        return ()
    return tuple(parse_operation(word) for word in words)


def apply_operation(
    state: StateVector, operation: Operation, gate: Gate1Q | None = None
) -> StateVector:
    """
    Applies one operation.

    Raises:
        ProtocolError: If a CH/CU operation is applied without a gate
    """
    kind = operation.kind
    if kind is OpKind.X:
        return apply_1q(state, _X, operation.target)
    if kind is OpKind.Z:
        return apply_1q(state, _Z, operation.target)
    if kind is OpKind.CNOT:
        return apply_controlled(state, _X, operation.controls, operation.target)
    if kind is OpKind.CZ:
        return apply_controlled(state, _Z, operation.controls, operation.target)
    if gate is None:
        raise ProtocolError(
            f"{operation} needs the non-local gate",
            error_code=ErrorCode.PROTOCOL_GATE_KIND_MISMATCH,
        )
    return apply_controlled(state, gate, operation.controls, operation.target)


def apply_operations(
    state: StateVector, operations: Sequence[Operation], gate: Gate1Q | None = None
) -> StateVector:
    """Applies an operation list right to left."""
    for operation in reversed(operations):
        state = apply_operation(state, operation, gate)
    return state


@dataclass(frozen=True, slots=True)
class CorrectionTable:
    """
    Outcome pattern -> operation list for one protocol stage.

    Attributes:
        kind: Protocol family
        stage: Step index at which the operations are applied
        actors: Parties applying the operations
        keys: Measured qubits whose outcomes index the rows
        basis: Basis the key qubits were measured in
        rows: Pattern (one bit per key) -> operations, read right to left
    """

    kind: ProtocolKind
    stage: int
    actors: tuple[PartyId, ...]
    keys: tuple[int, ...]
    basis: MeasurementBasis
    rows: Mapping[Pattern, tuple[Operation, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        rows = {tuple(p): tuple(ops) for p, ops in self.rows.items()}
        expected = set(all_patterns(len(self.keys)))
        if set(rows) != expected:
            missing = sorted(expected - set(rows))
            raise ProtocolError(
                f"table for stage {self.stage} does not cover patterns {missing}",
                step_index=self.stage,
            )
        object.__setattr__(self, "actors", tuple(self.actors))
        object.__setattr__(self, "keys", tuple(self.keys))
        object.__setattr__(self, "rows", MappingProxyType(rows))

    @classmethod
    def from_rule(
        cls,
        kind: ProtocolKind,
        stage: int,
        actors: Iterable[PartyId],
        keys: Sequence[int],
        basis: MeasurementBasis,
        rule: Callable[[Pattern], Iterable[Operation]],
    ) -> CorrectionTable:
        """Builds a table by evaluating rule(pattern) on every pattern."""
        rows = {pattern: tuple(rule(pattern)) for pattern in all_patterns(len(keys))}
        return cls(kind, stage, tuple(actors), tuple(keys), basis, rows)

    def lookup(self, outcomes: Mapping[int, int]) -> tuple[Operation, ...]:
        """
        Row selected by the received outcomes.

        Raises:
            ProtocolError: If an outcome for one of the keys is missing
        """
        missing = [k for k in self.keys if k not in outcomes]
        if missing:
            raise ProtocolError(
                f"outcomes of qubits {missing} were never received by {list(self.actors)}",
                step_index=self.stage,
                error_code=ErrorCode.PROTOCOL_MISSING_MESSAGE,
            )
        return self.rows[tuple(outcomes[k] for k in self.keys)]

    def render_pattern(self, pattern: Pattern) -> str:
        """Ket notation of a pattern, e.g. |1>_2 |0>_4 or |-+>_{11,12}."""
        if self.basis is MeasurementBasis.HADAMARD:
            symbols = "".join("-" if bit else "+" for bit in pattern)
            return f"|{symbols}>_{{{','.join(map(str, self.keys))}}}"
        return " ".join(f"|{bit}>_{key}" for key, bit in zip(self.keys, pattern))

    def render(self) -> str:
        lines = [
            f"{self.kind.value} stage {self.stage} ({', '.join(self.actors)})"
        ]
        for pattern in all_patterns(len(self.keys)):
            rendered = render_operations(self.rows[pattern])
            lines.append(f"  {self.render_pattern(pattern)}  ->  {rendered}")
        return "\n".join(lines)


def render_operations(operations: Sequence[Operation]) -> str:
    return " ".join(op.render() for op in operations) if operations else "I"


def all_patterns(width: int) -> list[Pattern]:
    """Every outcome pattern of `width` bits, first key most significant."""
    return list(itertools.product((0, 1), repeat=width))


def merge_tables(tables: Sequence[CorrectionTable]) -> CorrectionTable:
    """
    Merges the per-party tables of one stage into a single table.

    Keys are the union of the parties' keys in ascending label order;
    each merged row concatenates the parties' rows, and rows made of
    diagonal operations only are sorted by (target, kind).

    Raises:
        ProtocolError: If the tables belong to different stages
    """
    if not tables:
        raise ProtocolError("nothing to merge")
    if len(tables) == 1:
        return tables[0]
    first = tables[0]
    if any(t.stage != first.stage or t.kind != first.kind for t in tables):
        raise ProtocolError("cannot merge tables of different stages", step_index=first.stage)

    keys = tuple(sorted({k for t in tables for k in t.keys}))
    actors = tuple(a for t in tables for a in t.actors)

    def rule(pattern: Pattern) -> list[Operation]:
        outcomes = dict(zip(keys, pattern))
        operations = [op for t in tables for op in t.lookup(outcomes)]
        if all(op.is_diagonal for op in operations):
            operations.sort(key=Operation.sort_key)
        return operations

    return CorrectionTable.from_rule(first.kind, first.stage, actors, keys, first.basis, rule)
