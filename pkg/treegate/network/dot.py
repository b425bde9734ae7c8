"""Graphviz DOT export of a rooted tree."""

from __future__ import annotations

from .layout import QubitLayout
from .tree import RootedTree, TreeProfile


def export_dot(
    tree: RootedTree, profile: TreeProfile, layout: QubitLayout | None = None
) -> str:
    """
    Renders the tree as a DOT digraph.

    Edges point away from the root, each node is annotated with its
    depth and the root is drawn as a double circle. With a layout, nodes
    also show their input qubit and edges their Bell-pair labels.
    """
    lines = [
        "digraph rooted_tree {",
        "    rankdir=TB;",
        "    node [shape=circle];",
    ]
    for party in tree.parties:
        label = f"{party}\\nd={profile.depths[party]}"
        if layout is not None:
            label += f"\\nq{layout.input_qubit[party]}"
        attributes = [f'label="{label}"']
        if party == tree.root:
            attributes += ["shape=doublecircle", "style=bold"]
        lines.append(f'    "{party}" [{", ".join(attributes)}];')

    for child, parent in tree.edges:
        edge = f'    "{parent}" -> "{child}"'
        if layout is not None:
            child_half, parent_half = layout.edge_qubits[(child, parent)]
            edge += f' [label="{parent_half}-{child_half}"]'
        lines.append(edge + ";")

    lines.append("}")
    return "\n".join(lines) + "\n"
