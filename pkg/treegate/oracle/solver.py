"""
Correction solver.

Finds, for one outcome branch, the smallest set of diagonal corrections
that brings a pre-correction state onto its reference, and derives the
CU downward-phase correction tables level by level from it.
"""

from __future__ import annotations

import itertools
import threading
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from treegate.core.config import FIDELITY_TOLERANCE, get_config
from treegate.core.logging_system import get_logger, log_context
from treegate.globals.enums import MeasurementBasis, OpKind, ProtocolKind
from treegate.globals.exceptions import ErrorCode, SolverError
from treegate.network.layout import QubitLayout
from treegate.network.tree import PartyId, RootedTree, profile
from treegate.protocol.executor import execute
from treegate.protocol.operations import (
    CorrectionTable,
    Operation,
    all_patterns,
    apply_operations,
)
from treegate.protocol.schedule import cu_downward_stage, cu_schedule_with
from treegate.qsim import (
    ForcedAssignment,
    StateVector,
    fidelity_up_to_phase,
    random_state,
    random_unitary,
)

from .reference import stage_reference

logger = get_logger(__name__)

_KIND_ORDER = {kind: position for position, kind in enumerate(OpKind)}


@dataclass(frozen=True, slots=True)
class CorrectionDictionary:
    """
    Candidate corrections, each owned by one party.

    Candidates are kept sorted by (party id, operation kind); every one
    is diagonal, so any subset can be applied in any order.
    """

    owners: Mapping[Operation, PartyId] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for operation in self.owners:
            if not operation.is_diagonal:
                raise SolverError(
                    f"{operation} is not diagonal",
                    error_code=ErrorCode.SOLVER_INCONSISTENT_RULE,
                )
        ordered = sorted(
            self.owners.items(), key=lambda item: (item[1], _KIND_ORDER[item[0].kind])
        )
        object.__setattr__(self, "owners", MappingProxyType(dict(ordered)))

    @property
    def candidates(self) -> tuple[Operation, ...]:
        return tuple(self.owners)

    def owned_by(self, party: PartyId, operations: Iterable[Operation]) -> tuple[Operation, ...]:
        return tuple(op for op in operations if self.owners[op] == party)

    def __len__(self) -> int:
        return len(self.owners)


def ch_dictionary(layout: QubitLayout) -> CorrectionDictionary:
    """sz on every control party's input."""
    return CorrectionDictionary(
        {
            Operation(OpKind.Z, layout.input_qubit[party]): party
            for party in layout.tree.control_parties
        }
    )


def cu_dictionary(
    layout: QubitLayout, parties: Iterable[PartyId] | None = None
) -> CorrectionDictionary:
    """
    sz on each party's input, plus for internal parties a Z on the input
    controlled by every half shared with its children.
    """
    tree = layout.tree
    owners: dict[Operation, PartyId] = {}
    for party in parties if parties is not None else tree.control_parties:
        target = layout.input_qubit[party]
        owners[Operation(OpKind.Z, target)] = party
        if not tree.is_leaf(party):
            owners[Operation(OpKind.CZ, target, layout.halves_held(party))] = party
    return CorrectionDictionary(owners)


def solve_correction(
    pre_correction_state: StateVector,
    oracle_state: StateVector,
    dictionary: CorrectionDictionary,
) -> tuple[Operation, ...]:
    """
    Smallest dictionary subset mapping one state onto the other.

    Subsets are tried by increasing size, in dictionary order within a
    size, so ties go to the lexicographically smallest (party, kind).

    Returns:
        The operations sorted by (target, kind)

    Raises:
        SolverError: If no subset reaches the fidelity threshold
    """
    candidates = dictionary.candidates
    for size in range(len(candidates) + 1):
        for subset in itertools.combinations(candidates, size):
            corrected = apply_operations(pre_correction_state, subset)
            if fidelity_up_to_phase(corrected, oracle_state) >= 1.0 - FIDELITY_TOLERANCE:
                return tuple(sorted(subset, key=Operation.sort_key))
    raise SolverError(
        f"no combination of {len(candidates)} candidate corrections reaches the reference",
        error_code=ErrorCode.SOLVER_NO_SOLUTION,
    )


_cache: dict[tuple, Mapping[PartyId, CorrectionTable]] = {}
_cache_lock = threading.Lock()


def derive_cu_corrections(
    tree: RootedTree, layout: QubitLayout, seed: int | None = None
) -> Mapping[PartyId, CorrectionTable]:
    """
    Downward-phase correction table of every control party.

    For each depth d, every outcome pattern of the depth-d parents'
    Hadamard measurements is run on a seeded random witness and solved
    against the stage reference. Each party's share of the solution must
    depend only on the outcome it receives.

    Results are cached per tree and layout.

    Raises:
        SolverError: If a stage has no solution or a party's correction
            depends on outcomes it never receives
    """
    key = (
        tree.to_spec(),
        tuple(sorted(layout.input_qubit.items())),
        tuple(sorted(layout.edge_qubits.items())),
    )
    with _cache_lock:
        cached = _cache.get(key)
    if cached is not None:
        return cached

    if seed is None:
        seed = get_config().simulation.default_seed
    derived = _derive(tree, layout, seed)
    with _cache_lock:
        _cache[key] = derived
    return derived


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def _derive(
    tree: RootedTree, layout: QubitLayout, seed: int
) -> Mapping[PartyId, CorrectionTable]:
    rng = np.random.default_rng(seed)
    witness = random_state(layout.input_labels(), rng)
    u_gate = random_unitary(rng)
    height = profile(tree).height
    levels = tree.levels()
    downward: dict[PartyId, CorrectionTable] = {}

    for depth in range(1, height + 1):
        with log_context(depth=depth):
            stage = cu_downward_stage(height, depth)
            parties = levels[depth]
            keys = tuple(layout.parent_half(p) for p in parties)
            dictionary = cu_dictionary(layout, parties)
            reference = stage_reference(witness, layout, u_gate, depth)
            prefix = cu_schedule_with(tree, layout, downward).prefix(stage)

            rows: dict[PartyId, dict[int, tuple[Operation, ...]]] = {p: {} for p in parties}
            for pattern in all_patterns(len(keys)):
                policy = ForcedAssignment(dict(zip(keys, pattern)))
                state, _ = execute(prefix, witness, u_gate, policy, retire=True)
                solution = solve_correction(state, reference, dictionary)
                for party, bit in zip(parties, pattern):
                    own = dictionary.owned_by(party, solution)
                    if rows[party].setdefault(bit, own) != own:
                        raise SolverError(
                            f"correction of {party} depends on outcomes it does not receive",
                            error_code=ErrorCode.SOLVER_INCONSISTENT_RULE,
                        )

            for party in parties:
                downward[party] = CorrectionTable(
                    ProtocolKind.CU,
                    stage,
                    (party,),
                    (layout.parent_half(party),),
                    MeasurementBasis.HADAMARD,
                    {(bit,): ops for bit, ops in rows[party].items()},
                )
            logger.debug("downward stage solved", stage=stage, parties=len(parties))

    return MappingProxyType(downward)
