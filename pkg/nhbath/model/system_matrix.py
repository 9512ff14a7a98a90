from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ..errors.internal import InternalError


def basis_labels(n_emitters: int, L: int) -> tuple[str, ...]:
    """Labels `e1..eN, a1, b1, ..., aL, bL` of the single-excitation basis."""
    emitters = tuple(f"e{n + 1}" for n in range(n_emitters))
    photons = tuple(f"{s}{j + 1}" for j in range(L) for s in "ab")
    return emitters + photons


@dataclass(frozen=True)
class SystemMatrix:
    """Dense single-excitation Hamiltonian together with its basis labels.

    Emitters come first, followed by the photonic sites cell by cell.
    """
    entries: NDArray[np.complex128]
    basis_order: tuple[str, ...]
    n_emitters: int = 0

    def __post_init__(self):
        shape = self.entries.shape
        if len(shape) != 2 or shape[0] != shape[1]:
            raise InternalError("system matrix must be square", [shape])
        if len(self.basis_order) != shape[0]:
            raise InternalError("basis does not match matrix", [len(self.basis_order), shape])

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def L(self) -> int:
        return (self.dim - self.n_emitters) // 2

    @property
    def photon_block(self) -> NDArray[np.complex128]:
        n = self.n_emitters
        return self.entries[n:, n:]

    def index(self, label: str) -> int:
        return self.basis_order.index(label)

    def permuted(self, permutation: Sequence[int]) -> SystemMatrix:
        """Reorder the basis; `permutation[i]` is the old index of the new i-th state."""
        p = np.asarray(permutation)
        return SystemMatrix(
            self.entries[np.ix_(p, p)],
            tuple(self.basis_order[i] for i in p),
            self.n_emitters)

    def with_photon_perturbation(self, perturbation: NDArray[np.float64]) -> SystemMatrix:
        """Add a matrix acting on the photonic block only."""
        n = self.n_emitters
        entries = self.entries.copy()
        entries[n:, n:] += perturbation
        return SystemMatrix(entries, self.basis_order, n)

    def anti_hermitian_part(self) -> NDArray[np.complex128]:
        """(M - M^dagger)/(2i), negative semidefinite for a passive system."""
        m = self.entries
        return (m - m.conj().T) / 2j
