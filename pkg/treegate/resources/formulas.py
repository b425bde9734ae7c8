"""
Closed-form resource counts.

All counts are exact integers. For a tree with profile (h, n_d):

    ebits         n - 1
    cbits (CH)    sum over d of n_d (d + 1)
    cbits (CU)    2 (n - 1)
    steps (CH)    3h + 4
    steps (CU)    6h + 1
"""

from __future__ import annotations

from treegate.globals.enums import ProtocolKind
from treegate.globals.exceptions import ErrorCode, ProtocolError
from treegate.network.tree import RootedTree, TreeProfile


def ebits(tree_profile: TreeProfile) -> int:
    return tree_profile.n - 1


def cbits_ch(tree_profile: TreeProfile) -> int:
    """One cbit per edge upward plus a subtree broadcast per edge downward."""
    _require_parties(tree_profile)
    return sum(count * (depth + 1) for depth, count in tree_profile.counts.items())


def cbits_cu(tree_profile: TreeProfile) -> int:
    """Two cbits per edge, whatever the shape."""
    _require_parties(tree_profile)
    return 2 * sum(tree_profile.counts.values())


def cbits(kind: ProtocolKind, tree_profile: TreeProfile) -> int:
    return cbits_ch(tree_profile) if kind is ProtocolKind.CH else cbits_cu(tree_profile)


def steps(kind: ProtocolKind, tree_profile: TreeProfile) -> int:
    _require_parties(tree_profile)
    h = tree_profile.height
    return 3 * h + 4 if kind is ProtocolKind.CH else 6 * h + 1


def max_bell_pairs(tree: RootedTree) -> int:
    """Largest number of Bell pairs held by a single party (its degree)."""
    return max((degree for _, degree in tree.to_graph().degree()), default=0)


def _require_parties(tree_profile: TreeProfile) -> None:
    if tree_profile.n < 2:
        raise ProtocolError(
            "resource formulas need at least two parties",
            error_code=ErrorCode.PROTOCOL_TOO_FEW_PARTIES,
        )
