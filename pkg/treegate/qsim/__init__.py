"""
Statevector simulator.

Exposed:
    StateVector, MeasurementRecord, QubitId: State types
    new_basis_state, from_amplitudes, random_state, tensor: Preparation
    append_bell_pair, append_zero_qubit: Register growth
    apply_1q, apply_controlled, measure, retire_qubit, retire_all: Operations
    fidelity_up_to_phase: Comparison
    Gate1Q and gate constructors
    Forced, ForcedAssignment, Sampled, OutcomePolicy: Outcome policies
"""

from .gates import (
    Gate1Q,
    from_matrix,
    hadamard,
    identity,
    pauli_x,
    pauli_z,
    random_hermitian_involutory,
    random_unitary,
)
from .policies import Forced, ForcedAssignment, OutcomePolicy, Sampled
from .state import (
    MeasurementRecord,
    QubitId,
    StateVector,
    append_bell_pair,
    append_zero_qubit,
    apply_1q,
    apply_controlled,
    fidelity_up_to_phase,
    from_amplitudes,
    measure,
    new_basis_state,
    random_state,
    retire_all,
    retire_qubit,
    tensor,
)

__all__ = [
    "Gate1Q",
    "from_matrix",
    "hadamard",
    "identity",
    "pauli_x",
    "pauli_z",
    "random_hermitian_involutory",
    "random_unitary",
    "Forced",
    "ForcedAssignment",
    "OutcomePolicy",
    "Sampled",
    "MeasurementRecord",
    "QubitId",
    "StateVector",
    "append_bell_pair",
    "append_zero_qubit",
    "apply_1q",
    "apply_controlled",
    "fidelity_up_to_phase",
    "from_amplitudes",
    "measure",
    "new_basis_state",
    "random_state",
    "retire_all",
    "retire_qubit",
    "tensor",
]
