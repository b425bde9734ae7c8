"""
Run configuration and parsing of the command-line value specs.

Specs accepted on the command line (or in a YAML run file):

    --gate    identity | x | z | hadamard | random-unitary:SEED
              | random-hermitian:SEED | eight comma-separated floats
              (re,im pairs of the entries m00, m01, m10, m11)
    --state   zero | plus | basis:INDEX | random:SEED
    --policy  sampled:SEED | forced:BITS | enumerate
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any

import numpy as np
import yaml

from treegate.core.config import get_config
from treegate.core.error_handling import create_validation_error, validate_seed
from treegate.globals.enums import Numbering, ProtocolKind
from treegate.network.shapes import five_party_tree
from treegate.network.tree import RootedTree, parse_tree
from treegate.qsim import (
    ForcedAssignment,
    Gate1Q,
    OutcomePolicy,
    Sampled,
    StateVector,
    from_amplitudes,
    from_matrix,
    hadamard,
    identity,
    new_basis_state,
    pauli_x,
    pauli_z,
    random_hermitian_involutory,
    random_state,
    random_unitary,
)

_NAMED_GATES = {"identity": identity, "x": pauli_x, "z": pauli_z, "hadamard": hadamard}
_GATE_HINTS = [
    "identity, x, z, hadamard",
    "random-unitary:SEED, random-hermitian:SEED",
    "eight floats re,im for m00,m01,m10,m11",
]


@dataclass(frozen=True, slots=True)
class RunConfig:
    """
    Settings of one CLI run.

    Attributes:
        tree: Tree-spec file; the five-party tree when unset
        kind: Protocol family
        gate: Gate spec
        state: Input-state spec
        policy: Outcome-policy spec
        numbering: Qubit numbering scheme
        out: Output directory
        dot: DOT export path
    """

    tree: Path | None = None
    kind: ProtocolKind = ProtocolKind.CH
    gate: str = "hadamard"
    state: str | None = None
    policy: str | None = None
    numbering: Numbering = Numbering.CANONICAL
    out: Path | None = None
    dot: Path | None = None

    def with_overrides(self, **overrides: Any) -> RunConfig:
        """Copy where every non-None override replaces the stored value."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def load_tree(self) -> RootedTree:
        return parse_tree(self.tree) if self.tree is not None else five_party_tree()


def load_run_config(path: Path | None) -> RunConfig:
    """
    Reads a YAML run file; unknown keys are rejected.

    Raises:
        ValidationError: On unreadable files or unknown keys
    """
    if path is None:
        return RunConfig()
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except (OSError, yaml.YAMLError) as e:
        raise create_validation_error(
            f"cannot read run configuration {path}: {e}",
            field_name="config",
            field_value=str(path),
        ) from e
    if not isinstance(data, dict):
        raise create_validation_error(
            "run configuration must be a mapping",
            field_name="config",
            field_value=str(path),
        )

    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise create_validation_error(
            f"unknown run configuration keys: {', '.join(unknown)}",
            field_name="config",
            field_value=unknown,
            suggestions=sorted(known),
        )

    values: dict[str, Any] = {}
    for key, value in data.items():
        if key in ("tree", "out", "dot") and value is not None:
            values[key] = Path(value)
        elif key == "kind":
            values[key] = parse_kind(str(value))
        elif key == "numbering":
            values[key] = parse_numbering(str(value))
        else:
            values[key] = None if value is None else str(value)
    return RunConfig(**values)


def parse_kind(text: str) -> ProtocolKind:
    try:
        return ProtocolKind(text.lower())
    except ValueError as e:
        raise create_validation_error(
            f"unknown protocol kind {text!r}",
            field_name="kind",
            field_value=text,
            suggestions=[k.value for k in ProtocolKind],
        ) from e


def parse_numbering(text: str) -> Numbering:
    try:
        return Numbering(text.lower())
    except ValueError as e:
        raise create_validation_error(
            f"unknown numbering {text!r}",
            field_name="numbering",
            field_value=text,
            suggestions=[n.value for n in Numbering],
        ) from e


def parse_gate(spec: str) -> Gate1Q:
    """
    Builds the gate named by a gate spec.

    Raises:
        ValidationError: On an unrecognised spec
        SimulationError: If a matrix is not unitary
    """
    text = spec.strip().lower()
    if text in _NAMED_GATES:
        return _NAMED_GATES[text]()
    name, _, argument = text.partition(":")
    if name == "random-unitary" and argument:
        return random_unitary(np.random.default_rng(validate_seed(argument)))
    if name == "random-hermitian" and argument:
        return random_hermitian_involutory(np.random.default_rng(validate_seed(argument)))

    try:
        numbers = [float(part) for part in text.split(",")]
    except ValueError:
        numbers = []
    if len(numbers) != 8:
        raise create_validation_error(
            f"cannot read gate {spec!r}",
            field_name="gate",
            field_value=spec,
            suggestions=_GATE_HINTS,
        )
    entries = [complex(re, im) for re, im in zip(numbers[::2], numbers[1::2])]
    return from_matrix(np.array(entries).reshape(2, 2))


def parse_state(spec: str | None, labels: Sequence[int]) -> StateVector:
    """
    Builds the input state on `labels` (ascending input qubits).

    Raises:
        ValidationError: On an unrecognised spec
    """
    spec = spec or f"random:{get_config().simulation.default_seed}"
    name, _, argument = spec.strip().lower().partition(":")
    if name == "zero" and not argument:
        return new_basis_state(len(labels), 0, labels)
    if name == "plus" and not argument:
        return from_amplitudes(np.ones(1 << len(labels)), labels, normalize=True)
    if name == "basis" and argument.isdigit():
        return new_basis_state(len(labels), int(argument), labels)
    if name == "random" and argument:
        return random_state(labels, np.random.default_rng(validate_seed(argument)))
    raise create_validation_error(
        f"cannot read state {spec!r}",
        field_name="state",
        field_value=spec,
        suggestions=["zero", "plus", "basis:INDEX", "random:SEED"],
    )


def is_enumerate(spec: str | None) -> bool:
    return (spec or "").strip().lower() == "enumerate"


def parse_policy(spec: str | None, measured: Sequence[int]) -> OutcomePolicy:
    """
    Builds a single-branch outcome policy.

    Forced bits follow the schedule's measurement order; missing trailing
    bits are 0.

    Raises:
        ValidationError: On an unrecognised spec or too many forced bits
    """
    spec = spec or f"sampled:{get_config().simulation.default_seed}"
    name, _, argument = spec.strip().lower().partition(":")
    if name == "sampled" and argument:
        return Sampled.from_seed(validate_seed(argument))
    if name == "forced" and argument and set(argument) <= {"0", "1"}:
        if len(argument) > len(measured):
            raise create_validation_error(
                f"{len(argument)} forced bits for {len(measured)} measurements",
                field_name="policy",
                field_value=spec,
                suggestions=[f"at most {len(measured)} bits"],
            )
        return ForcedAssignment({q: int(b) for q, b in zip(measured, argument)})
    raise create_validation_error(
        f"cannot read policy {spec!r}",
        field_name="policy",
        field_value=spec,
        suggestions=["sampled:SEED", "forced:BITS", "enumerate"],
    )
