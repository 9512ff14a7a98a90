from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
import scipy.linalg

from ..model import SystemMatrix, Wavefunction
from ..spectral import obc_spectrum
from ..errors.numeric import PreconditionViolated
from ..logging import logger

log = logger()

DEFECTIVE_CONDITION = 1e10


@dataclass(frozen=True)
class Trajectory:
    """Time evolution of a single-excitation state.

    Attributes:
        times: sample times.
        emitter_amplitudes: shape (n_emitters, n_times).
        photon_amplitudes: shape (n_times, L, 2), kept on request only.
        norm: ||psi_t||.
        p_t: probability that the excitation has left the system, 1 - ||psi_t||^2.
    """
    times: NDArray[np.float64]
    emitter_amplitudes: NDArray[np.complex128]
    photon_amplitudes: NDArray[np.complex128] | None
    norm: NDArray[np.float64]
    p_t: NDArray[np.float64]

    def populations(self) -> NDArray[np.float64]:
        """C_e = |c_e(t)|^2 per emitter."""
        return np.abs(self.emitter_amplitudes) ** 2


def propagate(system: SystemMatrix, v0: NDArray[np.complex128], times: NDArray[np.float64]) -> NDArray[np.complex128]:
    """States e^{-iHt} v0 as columns.

    H is first balanced by a diagonal similarity, which for the nonreciprocal
    chain undoes most of the exponential site scaling. One eigendecomposition
    then serves every time; a nearly defective matrix falls back to a matrix
    exponential per time.
    """
    entries, (scale, _) = scipy.linalg.matrix_balance(system.entries, permute=False, separate=True)
    balanced = SystemMatrix(entries, system.basis_order, system.n_emitters)
    b0 = v0 / scale
    spectrum = obc_spectrum(balanced)
    if spectrum.condition_number() > DEFECTIVE_CONDITION:
        log.debug("eigenvector condition %.2e, using matrix exponentials",
                  spectrum.condition_number())
        states = np.stack([scipy.linalg.expm(-1j * t * entries) @ b0 for t in times], axis=1)
    else:
        coefficients = spectrum.left_vectors.conj().T @ b0
        phases = np.exp(-1j * np.outer(spectrum.eigenvalues, times))
        states = spectrum.right_vectors @ (phases * coefficients[:, None])
    states = scale[:, None] * states
    states[:, times == 0] = v0[:, None]
    return states


def evolve(
    system: SystemMatrix, psi0: Wavefunction, times: ArrayLike, keep_photons: bool = False
) -> Trajectory:
    t = np.asarray(times, dtype=np.float64)
    v0 = psi0.to_vector()
    if abs(np.linalg.norm(v0) - 1) > 1e-10:
        raise PreconditionViolated(f"initial state has norm {np.linalg.norm(v0)}")
    states = propagate(system, v0, t)
    n = system.n_emitters
    norm = np.linalg.norm(states, axis=0)
    photons = states[n:, :].T.reshape(t.size, -1, 2) if keep_photons else None
    return Trajectory(t, states[:n, :], photons, norm, 1 - norm**2)


def decay_probability(traj: Trajectory) -> NDArray[np.float64]:
    return 1 - traj.norm**2
