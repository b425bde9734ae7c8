"""
LOCC step schedules for the controlled-Hermitian (CH) and multiparty
controlled-unitary (CU) protocols over a rooted tree.

Step indices are batched: simultaneous actions of the same kind share
an index. With h the tree height, level d of the upward phase occupies
steps base+1 (measure), base+2 (send) and base+3 (parent corrects),
where base = 1 + 3(h - d); step 1 holds the leaves' CNOTs.

CH then measures every shared half in the Hadamard basis at 3h+2,
broadcasts each outcome to the child's subtree at 3h+3 and applies the
parity corrections at 3h+4. CU walks back down one level at a time:
for depth d the parents measure at 3h+3(d-1)+2, send at +1 and the
depth-d parties correct at +2, for 6h+1 steps in total.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field

from treegate.commands.classical_send import ClassicalSend
from treegate.commands.command import Command
from treegate.commands.conditional_correction import ConditionalCorrection
from treegate.commands.local_gate import LocalGate
from treegate.commands.measure import Measure
from treegate.core.logging_system import get_logger
from treegate.globals.enums import MeasurementBasis, OpKind, ProtocolKind
from treegate.globals.exceptions import ErrorCode, ProtocolError
from treegate.network.layout import QubitLayout
from treegate.network.tree import PartyId, RootedTree, TreeProfile, profile

from .operations import CorrectionTable, Operation, Pattern, merge_tables

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class ProtocolStep:
    """One party's action at a batched step index."""

    index: int
    actor: PartyId
    action: Command

    def execute(self, context) -> None:
        self.action.execute(context, self)

    def describe(self) -> str:
        return f"{self.index:>3}  {self.actor:<8} {self.action.describe()}"


@dataclass(frozen=True, slots=True)
class ProtocolSchedule:
    """
    Ordered step list of one protocol instance.

    Attributes:
        kind: Protocol family
        tree: Party network
        layout: Qubit assignment
        steps: Steps sorted by index
    """

    kind: ProtocolKind
    tree: RootedTree
    layout: QubitLayout
    steps: tuple[ProtocolStep, ...] = field(default=())

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.steps, key=lambda s: s.index))
        object.__setattr__(self, "steps", ordered)

    @property
    def step_count(self) -> int:
        return max((s.index for s in self.steps), default=0)

    def __iter__(self) -> Iterator[ProtocolStep]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def prefix(self, stop: int) -> ProtocolSchedule:
        """Schedule made of the steps whose index is below `stop`."""
        return ProtocolSchedule(
            self.kind, self.tree, self.layout, tuple(s for s in self.steps if s.index < stop)
        )

    def measured_qubits(self) -> tuple[int, ...]:
        """Qubits measured by the schedule, in execution order."""
        return tuple(s.action.qubit for s in self.steps if isinstance(s.action, Measure))

    def correction_stages(self) -> tuple[int, ...]:
        """Step indices carrying conditional corrections."""
        return tuple(
            sorted(
                {s.index for s in self.steps if isinstance(s.action, ConditionalCorrection)}
            )
        )

    def correction_tables(self, stage: int) -> CorrectionTable:
        """
        Merged correction table of one stage.

        Raises:
            ProtocolError: If the stage applies no correction
        """
        tables = [
            s.action.table
            for s in self.steps
            if s.index == stage and isinstance(s.action, ConditionalCorrection)
        ]
        if not tables:
            raise ProtocolError(f"no correction at step {stage}", step_index=stage)
        return merge_tables(tables)

    def validate(self) -> None:
        """
        Checks the messaging invariants statically.

        Every send reports a qubit its actor measured at an earlier step,
        and every correction reads only outcomes sent to its actor at an
        earlier step.

        Raises:
            ProtocolError: On the first violated invariant
        """
        measured_at: dict[int, tuple[PartyId, int]] = {}
        delivered: dict[PartyId, dict[int, int]] = {}
        for step in self.steps:
            action = step.action
            if isinstance(action, Measure):
                measured_at[action.qubit] = (step.actor, step.index)
            elif isinstance(action, ClassicalSend):
                source = measured_at.get(action.qubit)
                if source is None or source[0] != step.actor or source[1] >= step.index:
                    raise ProtocolError(
                        f"{step.actor} sends qubit {action.qubit} it has not measured",
                        step_index=step.index,
                        error_code=ErrorCode.PROTOCOL_MISSING_MESSAGE,
                    )
                for recipient in action.recipients:
                    delivered.setdefault(recipient, {})[action.qubit] = step.index
            elif isinstance(action, ConditionalCorrection):
                inbox = delivered.get(step.actor, {})
                for key in action.table.keys:
                    if key not in inbox or inbox[key] >= step.index:
                        raise ProtocolError(
                            f"{step.actor} corrects on qubit {key} it never received",
                            step_index=step.index,
                            error_code=ErrorCode.PROTOCOL_MISSING_MESSAGE,
                        )

    def render(self) -> str:
        """Text view, one line per step."""
        header = (
            f"{self.kind.value} schedule: {self.tree.n} parties, "
            f"{self.step_count} steps"
        )
        return "\n".join([header, *(s.describe() for s in self.steps)]) + "\n"


def build_ch_schedule(tree: RootedTree, layout: QubitLayout) -> ProtocolSchedule:
    """
    Schedule of the non-local controlled-Hermitian protocol (3h+4 steps).

    Raises:
        ProtocolError: If the tree has fewer than two parties
    """
    tree_profile = _require_parties(tree)
    h = tree_profile.height
    steps = _upward_phase(tree, layout, tree_profile, ProtocolKind.CH)

    measure_at = 3 * h + 2
    for party in _holders(tree):
        for child in tree.children(party):
            half = layout.parent_half(child)
            steps.append(ProtocolStep(measure_at, party, Measure(half, MeasurementBasis.HADAMARD)))
            steps.append(
                ProtocolStep(measure_at + 1, party, ClassicalSend(half, tree.subtree(child)))
            )
    for party in _level_order(tree)[1:]:
        table = parity_table(tree, layout, party, measure_at + 2)
        steps.append(ProtocolStep(measure_at + 2, party, ConditionalCorrection(table)))

    schedule = ProtocolSchedule(ProtocolKind.CH, tree, layout, tuple(steps))
    schedule.validate()
    logger.debug("ch schedule built", parties=tree.n, steps=schedule.step_count)
    return schedule


def build_cu_schedule(
    tree: RootedTree,
    layout: QubitLayout,
    downward: Mapping[PartyId, CorrectionTable] | None = None,
) -> ProtocolSchedule:
    """
    Schedule of the multiparty controlled-unitary protocol (6h+1 steps).

    Args:
        tree: Party network
        layout: Qubit assignment
        downward: Per-party corrections of the downward phase; derived by
            the correction solver (and cached per tree shape) when omitted

    Raises:
        ProtocolError: If the tree has fewer than two parties or a
            control party has no downward correction
    """
    _require_parties(tree)
    if downward is None:
        from treegate.oracle.solver import derive_cu_corrections

        downward = derive_cu_corrections(tree, layout)

    missing = [p for p in tree.control_parties if p not in downward]
    if missing:
        raise ProtocolError(
            f"no downward correction for parties {missing}",
            error_code=ErrorCode.PROTOCOL_INVALID_SCHEDULE,
        )
    schedule = cu_schedule_with(tree, layout, downward)
    schedule.validate()
    logger.debug("cu schedule built", parties=tree.n, steps=schedule.step_count)
    return schedule


def cu_schedule_with(
    tree: RootedTree,
    layout: QubitLayout,
    downward: Mapping[PartyId, CorrectionTable],
) -> ProtocolSchedule:
    """CU schedule holding downward corrections only for the parties given."""
    tree_profile = _require_parties(tree)
    h = tree_profile.height
    steps = _upward_phase(tree, layout, tree_profile, ProtocolKind.CU)

    levels = tree.levels()
    for depth in range(1, h + 1):
        measure_at = cu_downward_stage(h, depth) - 2
        for party in levels[depth - 1]:
            for child in tree.children(party):
                half = layout.parent_half(child)
                steps.append(
                    ProtocolStep(measure_at, party, Measure(half, MeasurementBasis.HADAMARD))
                )
                steps.append(ProtocolStep(measure_at + 1, party, ClassicalSend(half, (child,))))
        for party in levels[depth]:
            if party in downward:
                steps.append(
                    ProtocolStep(measure_at + 2, party, ConditionalCorrection(downward[party]))
                )

    return ProtocolSchedule(ProtocolKind.CU, tree, layout, tuple(steps))


def cu_downward_stage(height: int, depth: int) -> int:
    """Step index at which depth-`depth` parties apply their downward correction."""
    return 3 * height + 3 * depth + 1


def upward_stage(height: int, depth: int) -> int:
    """Step index at which the parents of depth-`depth` parties correct."""
    return 1 + 3 * (height - depth) + 3


def parity_correction(
    outcomes: Mapping[int, int], party: PartyId, input_qubit: int
) -> tuple[Operation, ...]:
    """
    CH phase correction of one control party.

    Args:
        outcomes: Hadamard outcomes of the halves on the party's path to
            the root (1 stands for |->)
        party: Correcting party
        input_qubit: The party's input qubit

    Returns:
        (sz on the input,) when an odd number of outcomes is 1, else ()
    """
    odd = sum(outcomes.values()) % 2 == 1
    logger.debug("parity correction", party=party, odd=odd)
    return (Operation(OpKind.Z, input_qubit),) if odd else ()


def parity_table(
    tree: RootedTree, layout: QubitLayout, party: PartyId, stage: int
) -> CorrectionTable:
    """Parity rule of a control party expanded over its path outcomes."""
    path = tree.path_to_root(party)[:-1]
    keys = tuple(sorted(layout.parent_half(p) for p in path))
    input_qubit = layout.input_qubit[party]

    def rule(pattern: Pattern) -> tuple[Operation, ...]:
        return parity_correction(dict(zip(keys, pattern)), party, input_qubit)

    return CorrectionTable.from_rule(
        ProtocolKind.CH, stage, (party,), keys, MeasurementBasis.HADAMARD, rule
    )


def cu_downward_rule(
    tree: RootedTree, layout: QubitLayout, party: PartyId, stage: int
) -> CorrectionTable:
    """
    Closed-form downward correction of a CU control party.

    On |-> an internal party applies a Z on its input controlled by the
    halves it shares with its children; a leaf applies sz on its input.
    """
    input_qubit = layout.input_qubit[party]
    halves = layout.halves_held(party)
    fix = Operation(OpKind.CZ, input_qubit, halves) if halves else Operation(OpKind.Z, input_qubit)

    return CorrectionTable.from_rule(
        ProtocolKind.CU,
        stage,
        (party,),
        (layout.parent_half(party),),
        MeasurementBasis.HADAMARD,
        lambda pattern: (fix,) if pattern[0] else (),
    )


def _upward_phase(
    tree: RootedTree, layout: QubitLayout, tree_profile: TreeProfile, kind: ProtocolKind
) -> list[ProtocolStep]:
    h = tree_profile.height
    levels = tree.levels()
    steps = [
        ProtocolStep(
            1,
            party,
            LocalGate(
                Operation(OpKind.CNOT, layout.child_half(party), (layout.input_qubit[party],))
            ),
        )
        for party in _level_order(tree)[1:]
        if tree.is_leaf(party)
    ]

    for depth in range(h, 0, -1):
        base = 1 + 3 * (h - depth)
        for party in levels[depth]:
            half = layout.child_half(party)
            steps.append(
                ProtocolStep(base + 1, party, Measure(half, MeasurementBasis.COMPUTATIONAL))
            )
            steps.append(ProtocolStep(base + 2, party, ClassicalSend(half, (tree.parent[party],))))
        for parent in levels[depth - 1]:
            if not tree.is_leaf(parent):
                table = upward_table(tree, layout, parent, kind, base + 3)
                steps.append(ProtocolStep(base + 3, parent, ConditionalCorrection(table)))
    return steps


def upward_table(
    tree: RootedTree,
    layout: QubitLayout,
    party: PartyId,
    kind: ProtocolKind,
    stage: int,
) -> CorrectionTable:
    """
    Corrections of a party after its children's computational outcomes.

    Each outcome-1 child's half is flipped back with sx first; then an
    internal party folds the halves and its input into the half it shares
    with its parent (one CNOT per control for CH, one multi-controlled NOT
    for CU), and the root applies the non-local gate's local part.
    """
    children = tree.children(party)
    keys = tuple(layout.child_half(c) for c in children)
    halves = tuple(layout.parent_half(c) for c in children)

    if party == tree.root:
        target = layout.input_qubit[party]
        if kind is ProtocolKind.CH:
            body = [Operation(OpKind.CH, target, (half,)) for half in halves]
        else:
            body = [Operation(OpKind.CU, target, halves)]
    else:
        toward_parent = layout.child_half(party)
        controls = halves + (layout.input_qubit[party],)
        if kind is ProtocolKind.CH:
            body = [Operation(OpKind.CNOT, toward_parent, (c,)) for c in controls]
        else:
            body = [Operation(OpKind.CNOT, toward_parent, controls)]

    def rule(pattern: Pattern) -> list[Operation]:
        flips = [Operation(OpKind.X, half) for half, bit in zip(halves, pattern) if bit]
        return body + flips

    return CorrectionTable.from_rule(
        kind, stage, (party,), keys, MeasurementBasis.COMPUTATIONAL, rule
    )


def _require_parties(tree: RootedTree) -> TreeProfile:
    if tree.n < 2:
        raise ProtocolError(
            f"a non-local gate needs at least two parties, got {tree.n}",
            error_code=ErrorCode.PROTOCOL_TOO_FEW_PARTIES,
        )
    return profile(tree)


def _level_order(tree: RootedTree) -> tuple[PartyId, ...]:
    return tuple(p for level in tree.levels() for p in level)


def _holders(tree: RootedTree) -> tuple[PartyId, ...]:
    """Parties sharing a Bell pair with at least one child, level order."""
    return tuple(p for p in _level_order(tree) if not tree.is_leaf(p))
