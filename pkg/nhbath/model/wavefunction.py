from __future__ import annotations

from dataclasses import dataclass, replace
from enum import StrEnum

import numpy as np
from numpy.typing import NDArray


class NormConvention(StrEnum):
    """How a wavefunction is normalized.

    - `RIGHT_NORMALIZED`: unit Euclidean norm
    - `BIORTHOGONAL`: unit overlap with its left partner
    """
    RIGHT_NORMALIZED = "right"
    BIORTHOGONAL = "biorthogonal"


@dataclass(frozen=True)
class Wavefunction:
    """Single-excitation state: emitter amplitudes `c_e` (one per emitter) and
    photon amplitudes `c_photon[j - 1, s]` with `s = 0` for sublattice `a`
    and `s = 1` for `b`."""
    c_e: NDArray[np.complex128]
    c_photon: NDArray[np.complex128]
    norm_convention: NormConvention = NormConvention.RIGHT_NORMALIZED

    @classmethod
    def from_vector(cls, vector: NDArray[np.complex128], n_emitters: int) -> Wavefunction:
        v = np.asarray(vector, dtype=np.complex128)
        return cls(v[:n_emitters].copy(), v[n_emitters:].reshape(-1, 2).copy())

    @classmethod
    def emitter_excited(cls, n_emitters: int, L: int, which: int = 0) -> Wavefunction:
        c_e = np.zeros(n_emitters, dtype=np.complex128)
        c_e[which] = 1.0
        return cls(c_e, np.zeros((L, 2), dtype=np.complex128))

    def to_vector(self) -> NDArray[np.complex128]:
        return np.concatenate([self.c_e, self.c_photon.reshape(-1)])

    @property
    def L(self) -> int:
        return self.c_photon.shape[0]

    @property
    def n_emitters(self) -> int:
        return self.c_e.shape[0]

    @property
    def emitter_weight(self) -> float:
        return float(np.sum(np.abs(self.c_e) ** 2))

    def weights(self) -> NDArray[np.float64]:
        """Photon weights |c_{j,s}|^2, shape (L, 2)."""
        return np.abs(self.c_photon) ** 2

    def norm(self) -> float:
        return float(np.linalg.norm(self.to_vector()))

    def left_weight(self, unit_cell: int) -> float:
        """Photon weight in the cells strictly left of `unit_cell`."""
        return float(np.sum(self.weights()[: unit_cell - 1]))

    def right_weight(self, unit_cell: int) -> float:
        """Photon weight in the cells strictly right of `unit_cell`."""
        return float(np.sum(self.weights()[unit_cell:]))

    def normalized(self) -> Wavefunction:
        n = self.norm()
        return replace(self, c_e=self.c_e / n, c_photon=self.c_photon / n,
                       norm_convention=NormConvention.RIGHT_NORMALIZED)

    def aligned(self) -> Wavefunction:
        """Fix the global phase: the first emitter amplitude becomes real and
        positive, or the largest photon amplitude if the emitters are empty."""
        if self.n_emitters > 0 and abs(self.c_e[0]) > 1e-12:
            ref = self.c_e[0]
        else:
            flat = self.c_photon.reshape(-1)
            ref = flat[np.argmax(np.abs(flat))]
        if ref == 0:
            return self
        phase = abs(ref) / ref
        return replace(self, c_e=self.c_e * phase, c_photon=self.c_photon * phase)
