"""
Dense statevector engine.

A StateVector stores its amplitudes as a tensor with one axis of size 2
per live qubit; `labels[i]` is the external qubit id held by axis i.
Axis 0 is the most significant bit of a flat basis index.

Every operation returns a new StateVector and leaves its input
untouched, so states can be handed to parallel branch workers freely.

Functions:
    new_basis_state, from_amplitudes, random_state: State preparation
    append_bell_pair, append_zero_qubit, tensor: Register growth
    apply_1q, apply_controlled: Gates
    measure, retire_qubit: Measurement and compaction
    fidelity_up_to_phase: Phase-invariant comparison
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass
from typing import Final, TypeAlias

import numpy as np

from treegate.core.config import (
    IMPOSSIBLE_BRANCH_CUTOFF,
    NORM_TOLERANCE,
    RETIREMENT_TOLERANCE,
)
from treegate.core.error_handling import handle_simulation_errors
from treegate.core.logging_system import get_logger
from treegate.globals.enums import MeasurementBasis
from treegate.globals.exceptions import (
    ErrorCode,
    ImpossibleBranchError,
    SimulationError,
    unknown_qubit,
)

from .gates import Gate1Q, hadamard
from .policies import OutcomePolicy

logger = get_logger(__name__)

QubitId: TypeAlias = Hashable

_BELL: Final[np.ndarray] = np.array([[1, 0], [0, 1]], dtype=complex) / np.sqrt(2)
_ZERO: Final[np.ndarray] = np.array([1, 0], dtype=complex)
_H: Final[Gate1Q] = hadamard()


@dataclass(frozen=True, slots=True, eq=False)
class StateVector:
    """
    Joint pure state of the live qubits.

    Attributes:
        amplitudes: Tensor of shape (2,) * num_qubits
        labels: External qubit id per tensor axis
    """

    amplitudes: np.ndarray
    labels: tuple[QubitId, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise SimulationError(
                f"Duplicate qubit labels: {list(labels)}",
                error_code=ErrorCode.QSIM_DUPLICATE_LABEL,
            )
        amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if amplitudes.size != 1 << len(labels):
            raise SimulationError(
                f"{amplitudes.size} amplitudes for {len(labels)} qubits",
                error_code=ErrorCode.QSIM_LABEL_MISMATCH,
            )
        object.__setattr__(self, "amplitudes", amplitudes.reshape((2,) * len(labels)))
        object.__setattr__(self, "labels", labels)

    @property
    def num_qubits(self) -> int:
        return len(self.labels)

    @property
    def qubit_labels(self) -> dict[QubitId, int]:
        """Mapping from external qubit id to tensor axis."""
        return {label: axis for axis, label in enumerate(self.labels)}

    def position(self, qubit: QubitId) -> int:
        """Returns the tensor axis of a live qubit."""
        try:
            return self.labels.index(qubit)
        except ValueError:
            raise unknown_qubit(qubit, self.labels) from None

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))

    def is_normalized(self, tolerance: float = NORM_TOLERANCE) -> bool:
        return abs(self.norm() ** 2 - 1.0) <= tolerance

    def to_vector(self, order: Sequence[QubitId] | None = None) -> np.ndarray:
        """
        Flattens the amplitudes.

        Args:
            order: Qubit order of the flat index, most significant first
                (defaults to the internal order)

        Returns:
            Complex vector of length 2**num_qubits
        """
        if order is None:
            return self.amplitudes.reshape(-1).copy()
        return _aligned(self, tuple(order)).reshape(-1).copy()

    def probability(self, qubit: QubitId, bit: int) -> float:
        """Probability of reading `bit` on `qubit` in the computational basis."""
        axis = self.position(qubit)
        return float(np.sum(np.abs(np.take(self.amplitudes, bit, axis=axis)) ** 2))

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self.num_qubits}, labels={list(self.labels)})"


@dataclass(frozen=True, slots=True)
class MeasurementRecord:
    """Outcome of one measurement with its pre-collapse probability."""

    qubit: QubitId
    basis: MeasurementBasis
    outcome: int
    probability: float

    @property
    def symbol(self) -> str:
        """'0'/'1' for computational outcomes, '+'/'-' for Hadamard ones."""
        if self.basis is MeasurementBasis.HADAMARD:
            return "-" if self.outcome else "+"
        return str(self.outcome)


def new_basis_state(
    num_qubits: int, basis_index: int, labels: Sequence[QubitId] | None = None
) -> StateVector:
    """
    Computational basis state |basis_index>.

    Args:
        num_qubits: Register size
        basis_index: Index of the basis state, label order most significant first
        labels: Qubit ids (defaults to 0..num_qubits-1)

    Raises:
        SimulationError: If the index is out of range
    """
    if labels is None:
        labels = tuple(range(num_qubits))
    if len(labels) != num_qubits:
        raise SimulationError(
            f"{len(labels)} labels given for {num_qubits} qubits",
            error_code=ErrorCode.QSIM_LABEL_MISMATCH,
        )
    if not 0 <= basis_index < 1 << num_qubits:
        raise SimulationError(
            f"Basis index {basis_index} out of range for {num_qubits} qubits",
            error_code=ErrorCode.QSIM_INDEX_OUT_OF_RANGE,
        )
    vector = np.zeros(1 << num_qubits, dtype=complex)
    vector[basis_index] = 1.0
    return StateVector(vector, tuple(labels))


def from_amplitudes(
    vector: Sequence[complex] | np.ndarray,
    labels: Sequence[QubitId],
    normalize: bool = False,
) -> StateVector:
    """
    Wraps a flat amplitude vector.

    Args:
        vector: Amplitudes, label order most significant first
        labels: Qubit ids
        normalize: Rescale to unit norm instead of rejecting

    Raises:
        SimulationError: If the vector is zero or not normalized
    """
    amplitudes = np.asarray(vector, dtype=complex).reshape(-1)
    norm = float(np.linalg.norm(amplitudes))
    if norm == 0.0:
        raise SimulationError(
            "Cannot build a state from the zero vector",
            error_code=ErrorCode.QSIM_LABEL_MISMATCH,
        )
    if normalize:
        amplitudes = amplitudes / norm
    elif abs(norm**2 - 1.0) > NORM_TOLERANCE:
        raise SimulationError(
            f"State is not normalized (norm^2 = {norm**2:.12f})",
            error_code=ErrorCode.QSIM_LABEL_MISMATCH,
        )
    return StateVector(amplitudes, tuple(labels))


def random_state(labels: Sequence[QubitId], rng: np.random.Generator) -> StateVector:
    """Normalized complex Gaussian state on `labels`."""
    dim = 1 << len(labels)
    vector = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return from_amplitudes(vector, labels, normalize=True)


def tensor(first: StateVector, second: StateVector) -> StateVector:
    """Product state first (x) second on disjoint labels."""
    _ensure_fresh(first, second.labels)
    return StateVector(
        np.multiply.outer(first.amplitudes, second.amplitudes),
        first.labels + second.labels,
    )


def append_bell_pair(state: StateVector, a: QubitId, b: QubitId) -> StateVector:
    """Returns state (x) (|00> + |11>)/sqrt(2) on the fresh labels (a, b)."""
    if a == b:
        raise SimulationError(
            f"Bell pair needs two distinct labels, got {a!r} twice",
            qubit=a,
            error_code=ErrorCode.QSIM_DUPLICATE_LABEL,
        )
    _ensure_fresh(state, (a, b))
    return StateVector(np.multiply.outer(state.amplitudes, _BELL), state.labels + (a, b))


def append_zero_qubit(state: StateVector, qubit: QubitId) -> StateVector:
    """Returns state (x) |0> on a fresh label."""
    _ensure_fresh(state, (qubit,))
    return StateVector(np.multiply.outer(state.amplitudes, _ZERO), state.labels + (qubit,))


def apply_1q(state: StateVector, gate: Gate1Q, qubit: QubitId) -> StateVector:
    """Applies a single-qubit gate to a live qubit."""
    axis = state.position(qubit)
    return StateVector(_apply_on_axis(state.amplitudes, gate.matrix, axis), state.labels)


def apply_controlled(
    state: StateVector,
    gate: Gate1Q,
    controls: Sequence[QubitId],
    target: QubitId,
) -> StateVector:
    """
    Applies `gate` to `target` on the subspace where every control is 1.

    Raises:
        SimulationError: On an empty control list, a control equal to the
            target, repeated controls or unknown labels
    """
    if not controls:
        raise SimulationError(
            "Controlled gate needs at least one control",
            qubit=target,
            error_code=ErrorCode.QSIM_EMPTY_CONTROLS,
        )
    if target in controls or len(set(controls)) != len(controls):
        raise SimulationError(
            f"Label collision between controls {list(controls)} and target {target!r}",
            qubit=target,
            error_code=ErrorCode.QSIM_LABEL_COLLISION,
        )

    control_axes = [state.position(c) for c in controls]
    target_axis = state.position(target)

    selector: list[slice | int] = [slice(None)] * state.num_qubits
    for axis in control_axes:
        selector[axis] = 1
    index = tuple(selector)

    # The control axes disappear from the selected block
    block_axis = target_axis - sum(1 for axis in control_axes if axis < target_axis)

    amplitudes = state.amplitudes.copy()
    amplitudes[index] = _apply_on_axis(amplitudes[index], gate.matrix, block_axis)
    return StateVector(amplitudes, state.labels)


@handle_simulation_errors("measure")
def measure(
    state: StateVector,
    qubit: QubitId,
    basis: MeasurementBasis,
    policy: OutcomePolicy,
) -> tuple[MeasurementRecord, StateVector]:
    """
    Measures a qubit and collapses the state.

    Outcome 0 is |0> or |+>, outcome 1 is |1> or |->. A Hadamard-basis
    measurement is H, a computational measurement, then H again, so the
    measured qubit is left in the observed eigenstate.

    Raises:
        ImpossibleBranchError: If the policy picks an outcome whose
            probability is below the impossible-branch cutoff
    """
    axis = state.position(qubit)
    amplitudes = state.amplitudes
    if basis is MeasurementBasis.HADAMARD:
        amplitudes = _apply_on_axis(amplitudes, _H.matrix, axis)

    p0 = float(np.sum(np.abs(np.take(amplitudes, 0, axis=axis)) ** 2))
    p1 = float(np.sum(np.abs(np.take(amplitudes, 1, axis=axis)) ** 2))
    outcome = policy.choose(qubit, p0, p1)
    probability = p1 if outcome else p0
    if probability < IMPOSSIBLE_BRANCH_CUTOFF:
        raise ImpossibleBranchError(qubit, outcome, probability)

    selector: list[slice | int] = [slice(None)] * state.num_qubits
    selector[axis] = 1 - outcome
    collapsed = amplitudes.copy()
    collapsed[tuple(selector)] = 0.0
    collapsed /= np.sqrt(probability)

    if basis is MeasurementBasis.HADAMARD:
        collapsed = _apply_on_axis(collapsed, _H.matrix, axis)

    record = MeasurementRecord(qubit, basis, outcome, probability)
    logger.debug(
        "measured",
        qubit=str(qubit),
        basis=basis.value,
        outcome=outcome,
        probability=probability,
    )
    return record, StateVector(collapsed, state.labels)


def retire_qubit(state: StateVector, qubit: QubitId) -> StateVector:
    """
    Removes a qubit that is in a product state with the rest.

    The qubit's reduced density matrix must be pure: its smaller
    eigenvalue may not exceed the retirement tolerance.

    Raises:
        SimulationError: If the qubit is entangled with the remainder
    """
    axis = state.position(qubit)
    matrix = np.moveaxis(state.amplitudes, axis, 0).reshape(2, -1)
    reduced = matrix @ matrix.conj().T
    smallest = float(np.linalg.eigvalsh(reduced)[0])
    if smallest > RETIREMENT_TOLERANCE:
        raise SimulationError(
            f"Qubit {qubit!r} is entangled with the register "
            f"(reduced eigenvalue {smallest:.3e})",
            qubit=qubit,
            error_code=ErrorCode.QSIM_ENTANGLED_RETIREMENT,
        )

    # Rank one: every row is a multiple of the remainder state
    row = int(np.argmax(np.sum(np.abs(matrix) ** 2, axis=1)))
    remainder = matrix[row] / np.linalg.norm(matrix[row])
    labels = state.labels[:axis] + state.labels[axis + 1 :]
    return StateVector(remainder, labels)


def fidelity_up_to_phase(a: StateVector, b: StateVector) -> float:
    """
    Returns |<a|b>|^2, aligning b's axes to a's labels.

    Raises:
        SimulationError: If the live label sets differ
    """
    if set(a.labels) != set(b.labels):
        raise SimulationError(
            f"Label mismatch: {sorted(map(str, a.labels))} vs {sorted(map(str, b.labels))}",
            error_code=ErrorCode.QSIM_LABEL_MISMATCH,
        )
    overlap = np.vdot(a.amplitudes, _aligned(b, a.labels))
    return float(min(1.0, abs(overlap) ** 2))


def retire_all(state: StateVector, qubits: Iterable[QubitId]) -> StateVector:
    """Retires several qubits in turn."""
    for qubit in qubits:
        state = retire_qubit(state, qubit)
    return state


def _apply_on_axis(amplitudes: np.ndarray, matrix: np.ndarray, axis: int) -> np.ndarray:
    updated = np.tensordot(matrix, amplitudes, axes=([1], [axis]))
    return np.moveaxis(updated, 0, axis)


def _aligned(state: StateVector, order: tuple[QubitId, ...]) -> np.ndarray:
    if set(order) != set(state.labels) or len(order) != state.num_qubits:
        raise SimulationError(
            f"Requested order {list(order)} does not match labels {list(state.labels)}",
            error_code=ErrorCode.QSIM_LABEL_MISMATCH,
        )
    return np.transpose(state.amplitudes, [state.position(q) for q in order])


def _ensure_fresh(state: StateVector, labels: Iterable[QubitId]) -> None:
    for label in labels:
        if label in state.labels:
            raise SimulationError(
                f"Qubit label {label!r} is already live",
                qubit=label,
                error_code=ErrorCode.QSIM_DUPLICATE_LABEL,
            )
