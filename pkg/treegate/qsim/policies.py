"""
Outcome policies for measurements.

A policy picks the outcome of a measurement from its Born
probabilities. Forced policies make runs deterministic; the sampled
policy draws from a seeded generator.
"""

from __future__ import annotations

from collections.abc import Hashable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Protocol, runtime_checkable

import numpy as np

from treegate.globals.exceptions import validation_failed


@runtime_checkable
class OutcomePolicy(Protocol):
    """Chooses a measurement outcome."""

    def choose(self, qubit: Hashable, p0: float, p1: float) -> int:
        """Returns 0 or 1 for the measurement of `qubit`."""
        ...


@dataclass(frozen=True, slots=True)
class Forced:
    """Always returns the same bit."""

    bit: int

    def __post_init__(self) -> None:
        if self.bit not in (0, 1):
            raise validation_failed("bit", self.bit, "forced outcome must be 0 or 1")

    def choose(self, qubit: Hashable, p0: float, p1: float) -> int:
        return self.bit


@dataclass(frozen=True, slots=True)
class ForcedAssignment:
    """
    Per-qubit forced outcomes.

    Qubits missing from the assignment get `default`.
    """

    bits: Mapping[Hashable, int] = field(default_factory=dict)
    default: int = 0

    def __post_init__(self) -> None:
        for qubit, bit in self.bits.items():
            if bit not in (0, 1):
                raise validation_failed(
                    "bits", bit, f"outcome for qubit {qubit} must be 0 or 1"
                )
        object.__setattr__(self, "bits", MappingProxyType(dict(self.bits)))

    def choose(self, qubit: Hashable, p0: float, p1: float) -> int:
        return self.bits.get(qubit, self.default)


@dataclass(slots=True)
class Sampled:
    """Draws outcomes from the Born distribution with a seeded generator."""

    rng: np.random.Generator

    @classmethod
    def from_seed(cls, seed: int) -> Sampled:
        return cls(np.random.default_rng(seed))

    def choose(self, qubit: Hashable, p0: float, p1: float) -> int:
        return 1 if self.rng.random() < p1 / (p0 + p1) else 0
