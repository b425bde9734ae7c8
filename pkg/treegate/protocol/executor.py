"""
Schedule execution on a statevector.

`execute` runs one branch under an outcome policy. `enumerate_branches`
walks every outcome branch depth-first, forking the execution context at
each measurement, and can fan the subtrees out over a thread pool; the
merged result is always in branch order (outcome 0 before 1, in
measurement order).
"""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from treegate.commands.measure import Measure
from treegate.core.config import get_config
from treegate.core.logging_system import get_logger
from treegate.globals.enums import ProtocolKind
from treegate.globals.exceptions import (
    ErrorCode,
    ImpossibleBranchError,
    ProtocolError,
)
from treegate.network.layout import QubitLayout
from treegate.network.tree import PartyId
from treegate.qsim import (
    Forced,
    Gate1Q,
    MeasurementRecord,
    OutcomePolicy,
    StateVector,
    append_bell_pair,
    retire_all,
)

from .operations import Operation, apply_operations
from .schedule import ProtocolSchedule, ProtocolStep
from .transcript import Transcript, TranscriptEntry

logger = get_logger(__name__)


@dataclass(slots=True)
class ExecutionContext:
    """
    Mutable state of one running branch.

    Attributes:
        state: Current joint state
        gate: Local part of the non-local gate
        policy: Outcome policy for measurements
        retire: Drop qubits right after measuring them
        layout: Qubit assignment of the schedule
        outcomes: Qubit -> outcome, in measurement order
        measured_by: Qubit -> party that measured it
        inboxes: Party -> outcomes received
        cbits: Classical bits sent so far
        probability: Probability of the branch so far
        entries: Transcript entries so far
    """

    state: StateVector
    gate: Gate1Q
    policy: OutcomePolicy
    retire: bool
    layout: QubitLayout
    outcomes: dict[int, int] = field(default_factory=dict)
    measured_by: dict[int, PartyId] = field(default_factory=dict)
    inboxes: dict[PartyId, dict[int, int]] = field(default_factory=dict)
    cbits: int = 0
    probability: float = 1.0
    entries: list[TranscriptEntry] = field(default_factory=list)

    def apply_operations(self, operations: Sequence[Operation]) -> None:
        self.state = apply_operations(self.state, operations, self.gate)

    def record_measurement(self, step: ProtocolStep, record: MeasurementRecord) -> None:
        self.outcomes[record.qubit] = record.outcome
        self.measured_by[record.qubit] = step.actor
        self.probability *= record.probability
        self.log(step, "measure", f"{record.qubit} -> {record.symbol}")

    def deliver(self, step: ProtocolStep, qubit: int, recipients: Sequence[PartyId]) -> None:
        """
        Delivers an outcome, one cbit per recipient.

        Raises:
            ProtocolError: If the actor has not measured the qubit
        """
        if self.measured_by.get(qubit) != step.actor:
            raise ProtocolError(
                f"{step.actor} cannot send the outcome of qubit {qubit}",
                step_index=step.index,
                error_code=ErrorCode.PROTOCOL_MISSING_MESSAGE,
            )
        for recipient in recipients:
            self.inboxes.setdefault(recipient, {})[qubit] = self.outcomes[qubit]
        self.cbits += len(recipients)
        self.log(step, "send", f"{qubit} -> {', '.join(recipients)}")

    def inbox(self, actor: PartyId) -> dict[int, int]:
        return self.inboxes.get(actor, {})

    def log(self, step: ProtocolStep, action: str, detail: str) -> None:
        self.entries.append(TranscriptEntry(step.index, step.actor, action, detail, self.cbits))

    def fork(self, policy: OutcomePolicy) -> ExecutionContext:
        """Independent copy following another outcome policy."""
        return replace(
            self,
            policy=policy,
            outcomes=dict(self.outcomes),
            measured_by=dict(self.measured_by),
            inboxes={party: dict(box) for party, box in self.inboxes.items()},
            entries=list(self.entries),
        )


@dataclass(frozen=True, slots=True)
class Branch:
    """One complete outcome branch of a schedule."""

    assignment: dict[int, int]
    state: StateVector
    probability: float
    transcript: Transcript


def execute(
    schedule: ProtocolSchedule,
    input_state: StateVector,
    gate: Gate1Q,
    policy: OutcomePolicy,
    retire: bool | None = None,
) -> tuple[StateVector, Transcript]:
    """
    Runs a schedule on one outcome branch.

    Args:
        schedule: Schedule to run
        input_state: State on exactly the layout's input qubits
        gate: Hermitian involutory for CH, any unitary for CU
        policy: Outcome policy
        retire: Retire qubits after measurement; defaults to the
            configured value

    Returns:
        Final state on the input qubits and the run's transcript

    Raises:
        ProtocolError: On a gate-kind or input mismatch
        ImpossibleBranchError: If the policy forces a zero-probability outcome
    """
    context = _start(schedule, input_state, gate, policy, retire)
    for step in schedule.steps:
        step.execute(context)
    state, transcript = _finish(schedule, context)
    logger.debug("schedule executed", kind=schedule.kind.value, cbits=transcript.cbits)
    return state, transcript


def enumerate_branches(
    schedule: ProtocolSchedule,
    input_state: StateVector,
    gate: Gate1Q,
    retire: bool | None = None,
    max_workers: int | None = None,
) -> list[Branch]:
    """
    Runs every non-impossible outcome branch of a schedule.

    Args:
        schedule: Schedule to run
        input_state: State on the layout's input qubits
        gate: Non-local gate's local part
        retire: Qubit retirement, configured value by default
        max_workers: Threads for the fan-out, TREEGATE_THREADS by default

    Returns:
        Branches in outcome order; probabilities sum to 1
    """
    workers = max_workers or get_config().simulation.max_workers
    root = _start(schedule, input_state, gate, Forced(0), retire)
    steps = schedule.steps

    if workers <= 1:
        branches: list[Branch] = []
        _explore(schedule, 0, root, branches)
    else:
        frontier = _frontier(schedule, root, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda item: _explore_from(schedule, *item), frontier))
        branches = [branch for part in parts for branch in part]

    logger.info(
        "branches enumerated",
        kind=schedule.kind.value,
        branches=len(branches),
        steps=len(steps),
        workers=workers,
    )
    return branches


def _start(
    schedule: ProtocolSchedule,
    input_state: StateVector,
    gate: Gate1Q,
    policy: OutcomePolicy,
    retire: bool | None,
) -> ExecutionContext:
    layout = schedule.layout
    if schedule.kind is ProtocolKind.CH and not gate.is_hermitian_involutory:
        raise ProtocolError(
            f"the CH protocol needs a Hermitian involutory gate, got {gate.name!r}",
            error_code=ErrorCode.PROTOCOL_GATE_KIND_MISMATCH,
        )
    if set(input_state.labels) != set(layout.input_labels()):
        raise ProtocolError(
            f"input state is on qubits {sorted(input_state.labels)}, "
            f"the layout expects {list(layout.input_labels())}",
            error_code=ErrorCode.PROTOCOL_INPUT_MISMATCH,
        )

    state = input_state
    for child_half, parent_half in layout.edge_qubits.values():
        state = append_bell_pair(state, child_half, parent_half)
    if retire is None:
        retire = get_config().simulation.retire_qubits
    return ExecutionContext(state, gate, policy, retire, layout)


def _finish(
    schedule: ProtocolSchedule, context: ExecutionContext
) -> tuple[StateVector, Transcript]:
    state = context.state
    if not context.retire:
        state = retire_all(state, [q for q in context.outcomes if q in state.labels])
    transcript = Transcript(
        kind=schedule.kind,
        parties=schedule.tree.n,
        ebits=len(schedule.layout.edge_qubits),
        cbits=context.cbits,
        step_count=max((e.index for e in context.entries), default=0),
        probability=context.probability,
        outcomes=dict(context.outcomes),
        entries=tuple(context.entries),
    )
    return state, transcript


def _explore(
    schedule: ProtocolSchedule,
    position: int,
    context: ExecutionContext,
    branches: list[Branch],
) -> None:
    steps = schedule.steps
    while position < len(steps):
        step = steps[position]
        if isinstance(step.action, Measure):
            for bit in (0, 1):
                fork = context.fork(Forced(bit))
                try:
                    step.execute(fork)
                except ImpossibleBranchError:
                    continue
                _explore(schedule, position + 1, fork, branches)
            return
        step.execute(context)
        position += 1

    state, transcript = _finish(schedule, context)
    branches.append(Branch(dict(context.outcomes), state, context.probability, transcript))


def _explore_from(
    schedule: ProtocolSchedule, position: int, context: ExecutionContext
) -> list[Branch]:
    branches: list[Branch] = []
    _explore(schedule, position, context, branches)
    return branches


def _frontier(
    schedule: ProtocolSchedule, root: ExecutionContext, width: int
) -> list[tuple[int, ExecutionContext]]:
    """Splits the branch tree at its first measurements into >= width subtrees."""
    steps = schedule.steps
    frontier = [(0, root)]
    while len(frontier) < width:
        expanded: list[tuple[int, ExecutionContext]] = []
        progressed = False
        for position, context in frontier:
            while position < len(steps) and not isinstance(steps[position].action, Measure):
                steps[position].execute(context)
                position += 1
            if position == len(steps):
                expanded.append((position, context))
                continue
            progressed = True
            for bit in (0, 1):
                fork = context.fork(Forced(bit))
                try:
                    steps[position].execute(fork)
                except ImpossibleBranchError:
                    continue
                expanded.append((position + 1, fork))
        frontier = expanded
        if not progressed:
            break
    return frontier
