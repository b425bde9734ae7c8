"""
Single-qubit gates.

Gate1Q wraps a validated 2x2 unitary together with a kind tag. The
named constructors cover the Pauli, Hadamard and identity gates used by
the protocols; seeded random constructors produce generic unitaries and
Hermitian involutory gates for property tests and the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Final

import numpy as np

from treegate.core.config import UNITARITY_TOLERANCE
from treegate.globals.enums import GateKind
from treegate.globals.exceptions import ErrorCode, SimulationError

_SQRT2_INV: Final[float] = 1 / np.sqrt(2)

_IDENTITY = np.eye(2, dtype=complex)
_PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV

# Kinds whose matrices are Hermitian and square to the identity
_INVOLUTORY_KINDS: Final[frozenset[GateKind]] = frozenset(
    {
        GateKind.HERMITIAN_INVOLUTORY,
        GateKind.PAULI_X,
        GateKind.PAULI_Z,
        GateKind.HADAMARD,
        GateKind.IDENTITY,
    }
)


@dataclass(frozen=True, slots=True, eq=False)
class Gate1Q:
    """
    Validated single-qubit gate.

    Attributes:
        matrix: 2x2 complex unitary
        kind: Gate family tag
        name: Display name used in transcripts
    """

    matrix: np.ndarray
    kind: GateKind = GateKind.UNITARY
    name: str = field(default="custom")

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=complex)
        if matrix.shape != (2, 2):
            raise SimulationError(
                f"Gate matrix must be 2x2, got shape {matrix.shape}",
                error_code=ErrorCode.QSIM_NOT_UNITARY,
            )
        if not np.allclose(
            matrix @ matrix.conj().T, _IDENTITY, atol=UNITARITY_TOLERANCE
        ):
            raise SimulationError(
                f"Gate '{self.name}' is not unitary",
                error_code=ErrorCode.QSIM_NOT_UNITARY,
            )
        if self.kind in _INVOLUTORY_KINDS and not _is_hermitian(matrix):
            raise SimulationError(
                f"Gate '{self.name}' is tagged {self.kind.value} but is not Hermitian",
                error_code=ErrorCode.QSIM_NOT_UNITARY,
            )
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def is_hermitian_involutory(self) -> bool:
        """True when the gate is Hermitian (hence involutory, being unitary)."""
        return self.kind in _INVOLUTORY_KINDS

    def dagger(self) -> Gate1Q:
        """Returns the adjoint gate."""
        return Gate1Q(self.matrix.conj().T, self.kind, f"{self.name}^dag")

    def __repr__(self) -> str:
        return f"Gate1Q(name={self.name!r}, kind={self.kind.value})"


def _is_hermitian(matrix: np.ndarray) -> bool:
    return bool(np.allclose(matrix, matrix.conj().T, atol=UNITARITY_TOLERANCE))


def identity() -> Gate1Q:
    return Gate1Q(_IDENTITY, GateKind.IDENTITY, "identity")


def pauli_x() -> Gate1Q:
    return Gate1Q(_PAULI_X, GateKind.PAULI_X, "x")


def pauli_z() -> Gate1Q:
    return Gate1Q(_PAULI_Z, GateKind.PAULI_Z, "z")


def hadamard() -> Gate1Q:
    return Gate1Q(_HADAMARD, GateKind.HADAMARD, "hadamard")


def from_matrix(matrix: np.ndarray, name: str = "custom") -> Gate1Q:
    """
    Builds a gate from a matrix, tagging it by inspection.

    Hermitian unitaries are tagged hermitian_involutory, anything else
    unitary. Non-unitary matrices are rejected.

    Args:
        matrix: 2x2 complex matrix
        name: Display name

    Returns:
        Validated gate
    """
    matrix = np.asarray(matrix, dtype=complex)
    kind = (
        GateKind.HERMITIAN_INVOLUTORY
        if matrix.shape == (2, 2) and _is_hermitian(matrix)
        else GateKind.UNITARY
    )
    return Gate1Q(matrix, kind, name)


def random_unitary(rng: np.random.Generator, name: str = "random-unitary") -> Gate1Q:
    """
    Draws a Haar-distributed 2x2 unitary.

    QR of a complex Gaussian matrix, with the phases of R's diagonal
    folded back into Q.
    """
    z = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return Gate1Q(q * phases, GateKind.UNITARY, name)


def random_hermitian_involutory(
    rng: np.random.Generator, name: str = "random-hermitian"
) -> Gate1Q:
    """Draws V diag(1, -1) V^dag for a Haar-random V."""
    v = random_unitary(rng).matrix
    matrix = v @ _PAULI_Z @ v.conj().T
    # Symmetrize away rounding so the Hermitian check is exact
    matrix = (matrix + matrix.conj().T) / 2
    return Gate1Q(matrix, GateKind.HERMITIAN_INVOLUTORY, name)
