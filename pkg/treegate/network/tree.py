"""
Rooted-tree model of the party graph.

The root is the target party; every control party names its parent.
Trees are validated on construction (single root, no duplicates, every
party reaches the root, no cycles) so the rest of the package can rely
on a well-formed tree.

Tree-spec text format::

    # comment
    root: T
    party: S11 parent: T
    party: S21 parent: S11
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import TypeAlias

import networkx as nx

from treegate.core.logging_system import get_logger
from treegate.globals.exceptions import ErrorCode, TreeError

logger = get_logger(__name__)

PartyId: TypeAlias = str
Edge: TypeAlias = tuple[PartyId, PartyId]

_ROOT_LINE = re.compile(r"^root:\s*(?P<name>\S+)$")
_PARTY_LINE = re.compile(r"^party:\s*(?P<name>\S+)\s+parent:\s*(?P<parent>\S+)$")


@dataclass(frozen=True, slots=True)
class RootedTree:
    """
    Validated rooted tree.

    Attributes:
        root: Target party
        parent: Child -> parent link for every non-root party
        parties: Root first, then control parties in declaration order
    """

    root: PartyId
    parent: Mapping[PartyId, PartyId]
    parties: tuple[PartyId, ...] = field(default=())

    def __post_init__(self) -> None:
        parent = dict(self.parent)
        parties = self.parties or (self.root, *parent)
        object.__setattr__(self, "parent", MappingProxyType(parent))
        object.__setattr__(self, "parties", tuple(parties))
        if self.parties[0] != self.root or set(self.parties) != {self.root, *parent}:
            raise TreeError(
                f"party list {list(self.parties)} does not match root and parent links",
                error_code=ErrorCode.TREE_MISSING_ROOT,
            )
        _validate(self.root, list(parent.items()), {})

    @classmethod
    def from_edges(cls, root: PartyId, edges: Iterable[Edge]) -> RootedTree:
        """Builds a tree from (child, parent) pairs in declaration order."""
        edges = list(edges)
        _validate(root, edges, {})
        return cls(root, dict(edges), (root, *(child for child, _ in edges)))

    @property
    def n(self) -> int:
        """Number of parties, target included."""
        return len(self.parties)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """(child, parent) links in declaration order."""
        return tuple((child, self.parent[child]) for child in self.parties[1:])

    @property
    def control_parties(self) -> tuple[PartyId, ...]:
        return self.parties[1:]

    def children(self, party: PartyId) -> tuple[PartyId, ...]:
        """Children of a party in declaration order."""
        return tuple(child for child in self.parties[1:] if self.parent[child] == party)

    def is_leaf(self, party: PartyId) -> bool:
        return not self.children(party)

    def path_to_root(self, party: PartyId) -> tuple[PartyId, ...]:
        """The party, its parent, ..., the root."""
        path = [party]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return tuple(path)

    def subtree(self, party: PartyId) -> tuple[PartyId, ...]:
        """The party and all its descendants, preorder."""
        result = [party]
        for child in self.children(party):
            result.extend(self.subtree(child))
        return tuple(result)

    def levels(self) -> tuple[tuple[PartyId, ...], ...]:
        """Parties grouped by depth, breadth-first within each level."""
        levels = [(self.root,)]
        while True:
            following = tuple(
                child for party in levels[-1] for child in self.children(party)
            )
            if not following:
                return tuple(levels)
            levels.append(following)

    def to_graph(self) -> nx.DiGraph:
        """Directed graph with edges pointing away from the root."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.parties)
        graph.add_edges_from((p, c) for c, p in self.edges)
        return graph

    def to_spec(self) -> str:
        """Serializes the tree in tree-spec format."""
        lines = [f"root: {self.root}"]
        lines.extend(f"party: {child} parent: {parent}" for child, parent in self.edges)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, slots=True)
class TreeProfile:
    """
    Depth profile of a rooted tree.

    Attributes:
        depths: Party -> number of edges to the root
        height: Largest depth
        counts: Depth d -> number of parties at depth d (d >= 1)
    """

    depths: Mapping[PartyId, int]
    height: int
    counts: Mapping[int, int]

    @property
    def n(self) -> int:
        """Number of parties: sum of the per-depth counts plus the target."""
        return sum(self.counts.values()) + 1

    def count(self, depth: int) -> int:
        return self.counts.get(depth, 0)


def profile(tree: RootedTree) -> TreeProfile:
    """Computes depths, height and per-depth counts of a tree."""
    depths = nx.single_source_shortest_path_length(tree.to_graph(), tree.root)
    ordered = {party: depths[party] for party in tree.parties}
    height = max(ordered.values())
    counts: dict[int, int] = {}
    for party, depth in ordered.items():
        if depth:
            counts[depth] = counts.get(depth, 0) + 1
    return TreeProfile(
        MappingProxyType(ordered), height, MappingProxyType(dict(sorted(counts.items())))
    )


def parse_tree_text(text: str) -> RootedTree:
    """
    Parses a tree-spec document.

    Raises:
        TreeError: On syntax errors or an invalid tree; the message cites
            the offending line
    """
    root: PartyId | None = None
    root_line: int | None = None
    edges: list[Edge] = []
    lines: dict[PartyId, int] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if match := _ROOT_LINE.match(line):
            if root is not None:
                raise TreeError(
                    f"second root declaration (first on line {root_line})",
                    line_number=number,
                    error_code=ErrorCode.TREE_DUPLICATE_PARTY,
                )
            root, root_line = match["name"], number
            lines.setdefault(root, number)
        elif match := _PARTY_LINE.match(line):
            name = match["name"]
            if name in lines:
                raise TreeError(
                    f"party '{name}' already declared on line {lines[name]}",
                    line_number=number,
                    error_code=ErrorCode.TREE_DUPLICATE_PARTY,
                )
            lines.setdefault(name, number)
            edges.append((name, match["parent"]))
        else:
            raise TreeError(
                f"expected 'root: <name>' or 'party: <name> parent: <name>', got {raw.strip()!r}",
                line_number=number,
            )

    if root is None:
        raise TreeError(
            "tree spec declares no root", error_code=ErrorCode.TREE_MISSING_ROOT
        )
    _validate(root, edges, lines)
    tree = RootedTree.from_edges(root, edges)
    logger.debug("tree parsed", root=root, parties=tree.n)
    return tree


def parse_tree(path: Path | str) -> RootedTree:
    """Reads and parses a tree-spec file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise TreeError(f"cannot read tree spec {path}: {e}", cause=e) from e
    return parse_tree_text(text)


def _validate(root: PartyId, edges: list[Edge], lines: Mapping[PartyId, int]) -> None:
    if not root:
        raise TreeError("tree has no root", error_code=ErrorCode.TREE_MISSING_ROOT)

    seen: set[PartyId] = {root}
    for child, _ in edges:
        if child in seen:
            raise TreeError(
                f"party '{child}' declared twice"
                + (" (it is the root)" if child == root else ""),
                line_number=lines.get(child),
                error_code=ErrorCode.TREE_DUPLICATE_PARTY,
            )
        seen.add(child)

    for child, parent in edges:
        if parent not in seen:
            raise TreeError(
                f"party '{child}' names unknown parent '{parent}'",
                line_number=lines.get(child),
                error_code=ErrorCode.TREE_DISCONNECTED,
            )

    graph = nx.DiGraph(edges)
    graph.add_node(root)
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle:
        members = [u for u, _ in cycle]
        raise TreeError(
            f"cycle through parties {members}",
            line_number=min((lines[m] for m in members if m in lines), default=None),
            error_code=ErrorCode.TREE_CYCLE,
        )

    # Acyclic with one parent per party: every party drains into the root
    if not nx.is_arborescence(graph.reverse(copy=False)):
        raise TreeError(
            "parties are not connected to the root",
            error_code=ErrorCode.TREE_DISCONNECTED,
        )
