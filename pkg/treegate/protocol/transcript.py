"""
Executed-step ledger of a protocol run.

A Transcript records, per executed step, the actor, the action, its
payload and the cumulative cbit count, plus the run totals. It dumps to
YAML with a stable key order so identical runs give identical files.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from treegate.core.logging_system import get_logger
from treegate.globals.enums import ProtocolKind

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class TranscriptEntry:
    """
    One executed action.

    Attributes:
        index: Batched step index
        actor: Acting party
        action: gate, measure, send or correction
        detail: Rendered payload (operation list, outcome, recipients)
        cbits: Classical bits sent so far, this entry included
    """

    index: int
    actor: str
    action: str
    detail: str
    cbits: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "actor": self.actor,
            "action": self.action,
            "detail": self.detail,
            "cbits": self.cbits,
        }


@dataclass(frozen=True, slots=True)
class Transcript:
    """
    Ledger and resource counters of one run.

    Attributes:
        kind: Protocol family
        parties: Number of parties n
        ebits: Bell pairs consumed (n-1)
        cbits: Classical bits sent
        step_count: Largest executed step index
        probability: Probability of the outcome branch taken
        outcomes: Measured qubit -> outcome bit, in measurement order
        entries: Executed actions in order
    """

    kind: ProtocolKind
    parties: int
    ebits: int
    cbits: int
    step_count: int
    probability: float
    outcomes: Mapping[int, int] = field(default_factory=dict)
    entries: tuple[TranscriptEntry, ...] = ()

    def pattern(self) -> str:
        """Outcome bits in measurement order, e.g. "0110"."""
        return "".join(str(bit) for bit in self.outcomes.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "parties": self.parties,
            "ebits": self.ebits,
            "cbits": self.cbits,
            "steps": self.step_count,
            # repr keeps the float exact and the file byte-stable
            "probability": repr(self.probability),
            "outcomes": {str(q): bit for q, bit in self.outcomes.items()},
            "entries": [entry.to_dict() for entry in self.entries],
        }

    def to_yaml(self) -> str:
        return yaml.safe_dump(self.to_dict(), sort_keys=False, default_flow_style=False)

    def write(self, path: Path) -> Path:
        """Writes the YAML transcript, creating parent directories."""
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_yaml(), encoding="utf-8")
        logger.info("transcript written", path=str(path), entries=len(self.entries))
        return path

    def summary(self) -> str:
        return (
            f"{self.kind.value}: n={self.parties} ebits={self.ebits} "
            f"cbits={self.cbits} steps={self.step_count}"
        )


def load_transcript(path: Path) -> dict[str, Any]:
    """Reads a transcript file back as plain data."""
    with path.open(encoding="utf-8") as handle:
        return yaml.safe_load(handle)
