"""
Reference outputs: the non-local gates applied directly to the inputs.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from treegate.core.config import FIDELITY_TOLERANCE
from treegate.core.logging_system import get_logger
from treegate.globals.exceptions import ErrorCode, ProtocolError
from treegate.network.layout import QubitLayout
from treegate.network.tree import PartyId, profile
from treegate.qsim import (
    Gate1Q,
    StateVector,
    append_zero_qubit,
    apply_controlled,
    fidelity_up_to_phase,
    pauli_x,
)

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class BranchVerdict:
    """Comparison of one protocol output with its reference."""

    passed: bool
    fidelity: float

    def __bool__(self) -> bool:
        return self.passed

    def __str__(self) -> str:
        return "pass" if self.passed else f"fail(fidelity={self.fidelity:.12f})"


def oracle_ch(input_state: StateVector, layout: QubitLayout, h_gate: Gate1Q) -> StateVector:
    """
    Controlled-h_gate from every control input onto the target input.

    Raises:
        ProtocolError: If h_gate is not Hermitian involutory
    """
    return oracle_ch_ordered(input_state, layout, h_gate, layout.tree.control_parties)


def oracle_ch_ordered(
    input_state: StateVector,
    layout: QubitLayout,
    h_gate: Gate1Q,
    order: Sequence[PartyId],
) -> StateVector:
    """oracle_ch with the controlled gates applied in an explicit party order."""
    if not h_gate.is_hermitian_involutory:
        raise ProtocolError(
            f"controlled-Hermitian reference needs a Hermitian involutory gate, "
            f"got {h_gate.name!r}",
            error_code=ErrorCode.PROTOCOL_GATE_KIND_MISMATCH,
        )
    if sorted(order) != sorted(layout.tree.control_parties):
        raise ProtocolError(
            f"order {list(order)} is not a permutation of the control parties",
            error_code=ErrorCode.PROTOCOL_INPUT_MISMATCH,
        )
    state = input_state
    for party in order:
        state = apply_controlled(
            state, h_gate, [layout.input_qubit[party]], layout.target_qubit
        )
    return state


def oracle_cu(input_state: StateVector, layout: QubitLayout, u_gate: Gate1Q) -> StateVector:
    """One u_gate on the target input controlled by every control input."""
    return apply_controlled(
        input_state, u_gate, list(layout.control_inputs()), layout.target_qubit
    )


def stage_reference(
    input_state: StateVector, layout: QubitLayout, u_gate: Gate1Q, depth: int
) -> StateVector:
    """
    Expected CU state right after the depth-`depth` downward corrections.

    The oracle output plus, for every edge whose child is deeper than
    `depth`, the still-live parent half holding the AND of the child's
    subtree inputs.
    """
    tree = layout.tree
    depths = profile(tree).depths
    state = oracle_cu(input_state, layout, u_gate)
    x_gate = pauli_x()
    for child, _ in tree.edges:
        if depths[child] <= depth:
            continue
        half = layout.parent_half(child)
        controls = [layout.input_qubit[p] for p in tree.subtree(child)]
        state = append_zero_qubit(state, half)
        state = apply_controlled(state, x_gate, controls, half)
    return state


def verify_branch(protocol_state: StateVector, oracle_state: StateVector) -> BranchVerdict:
    """
    Passes iff the two states agree up to global phase.

    Raises:
        SimulationError: If the live labels differ
    """
    fidelity = fidelity_up_to_phase(protocol_state, oracle_state)
    verdict = BranchVerdict(fidelity >= 1.0 - FIDELITY_TOLERANCE, fidelity)
    if not verdict.passed:
        logger.debug("branch failed", fidelity=fidelity)
    return verdict
