"""PBC bands, line and point gaps."""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from ..model import BathParams, bloch_hamiltonians
from ..errors.numeric import InvalidParameter, OnSpectrum
from .winding import START_GRID, converged_winding

ON_SPECTRUM = 1e-6


def momentum_grid(nk: int) -> NDArray[np.float64]:
    """Uniform grid on [-pi, pi)."""
    return -np.pi + 2 * np.pi * np.arange(nk) / nk


def pbc_bands(params: BathParams, nk: int) -> tuple[NDArray[np.float64], NDArray[np.complex128]]:
    """Momenta and eigenvalue pairs, shape (nk, 2), each pair sorted by real part."""
    if nk < 4:
        raise InvalidParameter("nk", nk, "nk >= 4")
    ks = momentum_grid(nk)
    energies = np.linalg.eigvals(bloch_hamiltonians(params, ks))
    order = np.lexsort((energies.imag, energies.real), axis=-1)
    return ks, np.take_along_axis(energies, order, axis=-1)


def pbc_spectrum(params: BathParams, nk: int) -> list[tuple[float, NDArray[np.complex128]]]:
    """Eigenvalue pairs of the Bloch Hamiltonian on a uniform k-grid."""
    ks, energies = pbc_bands(params, nk)
    return [(float(k), e) for k, e in zip(ks, energies)]


def line_gap(params: BathParams, nk: int = 512) -> float:
    """Distance along Re E between the lower and the upper band. Positive when
    a vertical line separates the two loops."""
    _, energies = pbc_bands(params, nk)
    return float(np.min(energies[:, 1].real) - np.max(energies[:, 0].real))


def band_separation(params: BathParams, nk: int = 4096) -> float:
    """Smallest distance between the two bands at equal momentum; vanishes at
    an exceptional point."""
    _, energies = pbc_bands(params, nk)
    return float(np.min(np.abs(energies[:, 1] - energies[:, 0])))


def spectrum_distance(params: BathParams, E: complex, nk: int = START_GRID) -> float:
    _, energies = pbc_bands(params, nk)
    return float(np.min(np.abs(energies - E)))


def point_gap_winding(params: BathParams, E: complex, nk: int = START_GRID) -> int:
    """Winding of det(H_k - E) around the origin while k runs once around the
    Brillouin zone."""
    distance = spectrum_distance(params, E, nk)
    if distance < ON_SPECTRUM:
        raise OnSpectrum(E, distance)

    def loop(n: int) -> NDArray[np.complex128]:
        k = 2 * np.pi * np.arange(n + 1) / n
        h = bloch_hamiltonians(params, k)
        return (h[:, 0, 0] - E) * (h[:, 1, 1] - E) - h[:, 0, 1] * h[:, 1, 0]

    return converged_winding(loop, nk, "point-gap winding")
