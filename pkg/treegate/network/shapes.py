"""
Named network shapes and exhaustive rooted-tree enumeration.

The parallel network is the star (every control party linked to the
target), the linear network is the path; both are special cases of the
rooted tree.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator

import networkx as nx

from treegate.globals.exceptions import validation_failed

from .tree import Edge, RootedTree

TARGET = "T"


def star_tree(n: int) -> RootedTree:
    """Target T with n-1 leaf children S1..S{n-1} (height 1)."""
    _check_size(n)
    return RootedTree.from_edges(TARGET, ((f"S{i}", TARGET) for i in range(1, n)))


def path_tree(n: int) -> RootedTree:
    """Chain T <- S1 <- S2 <- ... <- S{n-1} (height n-1)."""
    _check_size(n)
    edges = [(f"S{i}", TARGET if i == 1 else f"S{i - 1}") for i in range(1, n)]
    return RootedTree.from_edges(TARGET, edges)


def five_party_tree() -> RootedTree:
    """The five-party two-level tree: S11 and S12 under T, S21 and S22 under S11."""
    return RootedTree.from_edges(
        TARGET,
        [("S11", TARGET), ("S12", TARGET), ("S21", "S11"), ("S22", "S11")],
    )


def enumerate_rooted_trees(n: int) -> Iterator[RootedTree]:
    """
    Yields every rooted-tree shape with n parties exactly once.

    Free trees come from networkx; each is rooted at every node and the
    results deduplicated by their canonical nested-tuple form. Parties are
    named S1, S2, ... breadth-first under the target T.
    """
    _check_size(n)
    if n == 1:
        yield RootedTree(TARGET, {})
        return

    shapes: set[tuple] = set()
    for free_tree in nx.nonisomorphic_trees(n):
        for node in free_tree.nodes:
            shapes.add(nx.to_nested_tuple(free_tree, node, canonical_form=True))

    for shape in sorted(shapes, key=lambda s: (_height(s), repr(s))):
        yield _from_nested(shape)


def _from_nested(shape: tuple) -> RootedTree:
    edges: list[Edge] = []
    queue: deque[tuple[str, tuple]] = deque([(TARGET, shape)])
    counter = 0
    while queue:
        name, children = queue.popleft()
        for child in children:
            counter += 1
            child_name = f"S{counter}"
            edges.append((child_name, name))
            queue.append((child_name, child))
    return RootedTree.from_edges(TARGET, edges)


def _height(shape: tuple) -> int:
    return 1 + max(map(_height, shape)) if shape else 0


def _check_size(n: int) -> None:
    if n < 1:
        raise validation_failed("n", n, "a network needs at least one party")
