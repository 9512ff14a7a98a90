"""Emitter self-energies from the momentum sum over a ring of `n` cells.

With w = z + i kappa/2, A(k) = J1 - kappa/2 + J2 e^{-ik} and
B(k) = J1 + kappa/2 + J2 e^{ik}, the bath resolvent at momentum k is
[[w, A], [B, w]] / (w^2 - A B).
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..model import BathParams, EmitterAttachment
from ..spectral import spectrum_distance
from ..spectral.bloch import ON_SPECTRUM
from ..errors.numeric import NoConvergence, OnSpectrum
from ..logging import logger

log = logger()

DEFAULT_GRID = 4096
MAX_GRID = 1 << 18
TOLERANCE = 1e-12


def ring_momenta(n: int) -> NDArray[np.float64]:
    return 2 * np.pi * np.arange(n) / n


def bath_resolvent(params: BathParams, z: ArrayLike, ks: NDArray[np.float64]) -> NDArray[np.complex128]:
    """(z - H_k)^{-1} with shape z.shape + (nk, 2, 2)."""
    w = np.asarray(z, dtype=np.complex128)[..., None] - params.uniform_loss
    upper = params.j1_minus + params.J2 * np.exp(-1j * ks)
    lower = params.j1_plus + params.J2 * np.exp(1j * ks)
    with np.errstate(divide="ignore", invalid="ignore"):
        inv = 1 / (w * w - upper * lower)
    r = np.empty(w.shape[:-1] + (ks.size, 2, 2), dtype=np.complex128)
    r[..., 0, 0] = w * inv
    r[..., 1, 1] = w * inv
    r[..., 0, 1] = upper * inv
    r[..., 1, 0] = lower * inv
    return r


def self_energy_on_grid(
    params: BathParams, attachments: Sequence[EmitterAttachment], z: ArrayLike, n: int
) -> NDArray[np.complex128]:
    """Self-energy matrices on a ring of `n` cells, shape z.shape + (N, N).
    Entry (p, q) is g_p g_q <exp(ik(j_p - j_q)) R_{alpha_p alpha_q}(k)>_k."""
    ks = ring_momenta(n)
    r = bath_resolvent(params, z, ks)
    count = len(attachments)
    sigma = np.empty(r.shape[:-3] + (count, count), dtype=np.complex128)
    for p, ep in enumerate(attachments):
        for q, eq in enumerate(attachments):
            phase = np.exp(1j * ks * (ep.unit_cell - eq.unit_cell))
            element = r[..., ep.sublattice.offset, eq.sublattice.offset]
            sigma[..., p, q] = ep.g * eq.g * np.mean(element * phase, axis=-1)
    return sigma


def _converged(
    params: BathParams, attachments: Sequence[EmitterAttachment], z: complex, L_grid: int
) -> NDArray[np.complex128]:
    distance = spectrum_distance(params, z, max(L_grid, 4))
    if distance < ON_SPECTRUM:
        raise OnSpectrum(z, distance)

    n = L_grid
    previous = self_energy_on_grid(params, attachments, z, n)
    while n < MAX_GRID:
        n *= 2
        current = self_energy_on_grid(params, attachments, z, n)
        if np.max(np.abs(current - previous)) < TOLERANCE * max(1.0, float(np.max(np.abs(current)))):
            return current
        log.debug("self-energy at %s not converged on %d cells", z, n)
        previous = current
    raise NoConvergence("self-energy momentum sum", n)


def self_energy(
    params: BathParams, attach: EmitterAttachment, z: complex, L_grid: int = DEFAULT_GRID
) -> complex:
    """Sigma(z) of a single emitter, converged by doubling the momentum grid."""
    return complex(_converged(params, [attach], z, L_grid)[0, 0])


def self_energy_matrix(
    params: BathParams, attachments: Sequence[EmitterAttachment], z: complex,
    L_grid: int = DEFAULT_GRID
) -> NDArray[np.complex128]:
    """N x N self-energy matrix of several emitters."""
    return _converged(params, attachments, z, L_grid)
