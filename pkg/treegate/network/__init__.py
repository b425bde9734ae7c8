"""
Party network: rooted trees, depth profiles and qubit layouts.

Exposed:
    RootedTree, TreeProfile, PartyId, Edge: Tree model
    parse_tree, parse_tree_text, profile: Construction and analysis
    QubitLayout, allocate_layout: Qubit assignment
    star_tree, path_tree, five_party_tree, enumerate_rooted_trees: Shapes
    export_dot: Graphviz export
"""

from .dot import export_dot
from .layout import QubitLayout, allocate_layout
from .shapes import enumerate_rooted_trees, five_party_tree, path_tree, star_tree
from .tree import (
    Edge,
    PartyId,
    RootedTree,
    TreeProfile,
    parse_tree,
    parse_tree_text,
    profile,
)

__all__ = [
    "Edge",
    "PartyId",
    "RootedTree",
    "TreeProfile",
    "parse_tree",
    "parse_tree_text",
    "profile",
    "QubitLayout",
    "allocate_layout",
    "star_tree",
    "path_tree",
    "five_party_tree",
    "enumerate_rooted_trees",
    "export_dot",
]
