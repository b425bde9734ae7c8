"""
Parallel / linear / rooted-tree comparison report.

The parallel network is the star on the same number of parties (h = 1),
the linear one the path (h = n - 1); the third row is the given tree.
"""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass
from typing import Any

from treegate.core.logging_system import get_logger
from treegate.globals.enums import NetworkShape, ProtocolKind
from treegate.network.shapes import path_tree, star_tree
from treegate.network.tree import RootedTree, profile

from .formulas import cbits, ebits, max_bell_pairs, steps

logger = get_logger(__name__)

_COLUMNS = ("network", "n", "h", "ebits", "cbits", "steps", "max_bell_pairs")


@dataclass(frozen=True, slots=True)
class ResourceRow:
    network: str
    n: int
    h: int
    ebits: int
    cbits: int
    steps: int
    max_bell_pairs: int


@dataclass(frozen=True, slots=True)
class ResourceReport:
    """
    Resource comparison for one protocol family.

    Attributes:
        kind: Protocol family
        n: Number of parties
        height: Height of the given tree
        counts: Depth -> number of parties at that depth, given tree
        rows: Parallel, linear and given-tree rows
    """

    kind: ProtocolKind
    n: int
    height: int
    counts: tuple[tuple[int, int], ...]
    rows: tuple[ResourceRow, ...]

    def row(self, network: NetworkShape) -> ResourceRow:
        return next(r for r in self.rows if r.network == network.value)

    def to_records(self) -> list[dict[str, Any]]:
        return [{"kind": self.kind.value, **asdict(row)} for row in self.rows]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=("kind", *_COLUMNS), lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.to_records())
        return buffer.getvalue()

    def render(self) -> str:
        """Aligned plain-text table."""
        profile_text = ", ".join(f"n_{d}={c}" for d, c in self.counts)
        header = f"{self.kind.value} protocol, n={self.n}, h={self.height} ({profile_text})"
        cells = [list(_COLUMNS)] + [
            [str(value) for value in asdict(row).values()] for row in self.rows
        ]
        widths = [max(len(line[i]) for line in cells) for i in range(len(_COLUMNS))]
        lines = [header]
        for number, line in enumerate(cells):
            lines.append(
                "  ".join(
                    cell.ljust(width) if i == 0 else cell.rjust(width)
                    for i, (cell, width) in enumerate(zip(line, widths))
                ).rstrip()
            )
            if number == 0:
                lines.append("  ".join("-" * width for width in widths))
        return "\n".join(lines) + "\n"


def resource_row(kind: ProtocolKind, tree: RootedTree, network: NetworkShape) -> ResourceRow:
    tree_profile = profile(tree)
    return ResourceRow(
        network=network.value,
        n=tree_profile.n,
        h=tree_profile.height,
        ebits=ebits(tree_profile),
        cbits=cbits(kind, tree_profile),
        steps=steps(kind, tree_profile),
        max_bell_pairs=max_bell_pairs(tree),
    )


def comparison_report(kind: ProtocolKind, tree: RootedTree) -> ResourceReport:
    """
    Three-row comparison of the given tree with the star and the path.

    Raises:
        ProtocolError: If the tree has fewer than two parties
    """
    tree_profile = profile(tree)
    rows = (
        resource_row(kind, star_tree(tree.n), NetworkShape.PARALLEL),
        resource_row(kind, path_tree(tree.n), NetworkShape.LINEAR),
        resource_row(kind, tree, NetworkShape.TREE),
    )
    logger.debug("comparison report built", kind=kind.value, parties=tree.n)
    return ResourceReport(
        kind=kind,
        n=tree_profile.n,
        height=tree_profile.height,
        counts=tuple(tree_profile.counts.items()),
        rows=rows,
    )
