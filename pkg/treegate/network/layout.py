"""
Qubit layout: which party holds which qubit.

Each party holds one input qubit; each tree edge carries one Bell pair
whose child half sits with the child and parent half with the parent.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType

from treegate.globals.enums import Numbering
from treegate.globals.exceptions import ErrorCode, TreeError

from .tree import Edge, PartyId, RootedTree

QubitLabel = int


@dataclass(frozen=True, slots=True)
class QubitLayout:
    """
    Assignment of qubit labels to parties.

    Attributes:
        tree: Tree the layout was allocated for
        input_qubit: Party -> its share of the input state
        edge_qubits: (child, parent) -> (child_half, parent_half)
        numbering: Scheme used to allocate the labels
    """

    tree: RootedTree
    input_qubit: Mapping[PartyId, QubitLabel]
    edge_qubits: Mapping[Edge, tuple[QubitLabel, QubitLabel]]
    numbering: Numbering = Numbering.CANONICAL

    def __post_init__(self) -> None:
        object.__setattr__(self, "input_qubit", MappingProxyType(dict(self.input_qubit)))
        object.__setattr__(self, "edge_qubits", MappingProxyType(dict(self.edge_qubits)))
        labels = self.all_labels()
        if len(set(labels)) != len(labels):
            raise TreeError(
                f"layout reuses qubit labels: {sorted(labels)}",
                error_code=ErrorCode.LAYOUT_NUMBERING_MISMATCH,
            )

    def all_labels(self) -> list[QubitLabel]:
        labels = list(self.input_qubit.values())
        for pair in self.edge_qubits.values():
            labels.extend(pair)
        return labels

    def input_labels(self) -> tuple[QubitLabel, ...]:
        """Input qubits in ascending label order (the target's comes last)."""
        return tuple(sorted(self.input_qubit.values()))

    @property
    def target_qubit(self) -> QubitLabel:
        return self.input_qubit[self.tree.root]

    def control_inputs(self) -> tuple[QubitLabel, ...]:
        """Input qubits of the control parties, in declaration order."""
        return tuple(self.input_qubit[p] for p in self.tree.control_parties)

    def child_half(self, party: PartyId) -> QubitLabel:
        """Half of the Bell pair a control party shares with its parent."""
        return self.edge_qubits[(party, self.tree.parent[party])][0]

    def parent_half(self, child: PartyId) -> QubitLabel:
        """Half of the child's Bell pair held by the child's parent."""
        return self.edge_qubits[(child, self.tree.parent[child])][1]

    def halves_held(self, party: PartyId) -> tuple[QubitLabel, ...]:
        """Halves a party shares with its children, in child order."""
        return tuple(self.parent_half(child) for child in self.tree.children(party))

    def owner(self, qubit: QubitLabel) -> PartyId:
        """Party holding a qubit."""
        for party, label in self.input_qubit.items():
            if label == qubit:
                return party
        for (child, parent), (child_half, parent_half) in self.edge_qubits.items():
            if qubit == child_half:
                return child
            if qubit == parent_half:
                return parent
        raise TreeError(
            f"qubit {qubit} is not part of the layout",
            error_code=ErrorCode.LAYOUT_NUMBERING_MISMATCH,
        )

    def edge_of(self, qubit: QubitLabel) -> Edge:
        """Tree edge whose Bell pair contains a qubit."""
        for edge, pair in self.edge_qubits.items():
            if qubit in pair:
                return edge
        raise TreeError(
            f"qubit {qubit} is not a Bell-pair half",
            error_code=ErrorCode.LAYOUT_NUMBERING_MISMATCH,
        )


def allocate_layout(
    tree: RootedTree, numbering: Numbering = Numbering.CANONICAL
) -> QubitLayout:
    """
    Allocates 3n-2 labels starting at 1.

    Canonical numbering walks the levels from the deepest up. At each
    level it first numbers the parent halves of the edges coming from the
    level below, then each party's input followed by its child half. On
    the five-party two-level tree this gives the familiar 1..13 layout.

    Raises:
        TreeError: If five-party numbering is asked for another tree shape
    """
    if numbering is Numbering.FIVE_PARTY:
        return _five_party_layout(tree)

    levels = tree.levels()
    inputs: dict[PartyId, QubitLabel] = {}
    child_halves: dict[PartyId, QubitLabel] = {}
    parent_halves: dict[PartyId, QubitLabel] = {}
    label = 1

    for depth in range(len(levels) - 1, -1, -1):
        if depth + 1 < len(levels):
            for child in levels[depth + 1]:
                parent_halves[child] = label
                label += 1
        for party in levels[depth]:
            inputs[party] = label
            label += 1
            if party != tree.root:
                child_halves[party] = label
                label += 1

    edges = {
        (child, parent): (child_halves[child], parent_halves[child])
        for child, parent in tree.edges
    }
    return QubitLayout(tree, inputs, edges, Numbering.CANONICAL)


def _five_party_layout(tree: RootedTree) -> QubitLayout:
    root = tree.root
    depth_one = tree.children(root)
    internal = [p for p in depth_one if not tree.is_leaf(p)]
    leaves = [p for p in depth_one if tree.is_leaf(p)]
    shape_ok = (
        tree.n == 5
        and len(internal) == 1
        and len(leaves) == 1
        and len(tree.children(internal[0])) == 2
        and all(tree.is_leaf(c) for c in tree.children(internal[0]))
    )
    if not shape_ok:
        raise TreeError(
            "five-party numbering needs a target with one leaf child and one "
            "child holding two leaves",
            error_code=ErrorCode.LAYOUT_NUMBERING_MISMATCH,
        )

    middle, leaf = internal[0], leaves[0]
    first, second = tree.children(middle)
    inputs = {first: 1, second: 3, middle: 7, leaf: 9, root: 13}
    edges = {
        (first, middle): (2, 5),
        (second, middle): (4, 6),
        (middle, root): (8, 11),
        (leaf, root): (10, 12),
    }
    return QubitLayout(tree, inputs, edges, Numbering.FIVE_PARTY)
