from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..model import BathParams, Boundary, EmitterAttachment, Wavefunction, apply_system
from ..spectral import spectrum_distance
from ..spectral.bloch import ON_SPECTRUM
from ..errors.numeric import OnSpectrum
from .self_energy import bath_resolvent, ring_momenta


def ring_profile(
    params: BathParams, attachments: Sequence[EmitterAttachment], E_b: complex,
    c_e: ArrayLike, L: int
) -> NDArray[np.complex128]:
    """Photon amplitudes c_k = (E_b - H_k)^{-1} sum_n g_kn c_en brought back to
    the cells 1..L of a ring, unnormalized, shape (L, 2)."""
    ks = ring_momenta(L)
    r = bath_resolvent(params, E_b, ks)
    amplitudes = np.asarray(c_e, dtype=np.complex128)
    c_k = np.zeros((L, 2), dtype=np.complex128)
    for e, ce in zip(attachments, amplitudes):
        source = e.g * ce * np.exp(-1j * ks * e.unit_cell)
        c_k += r[:, :, e.sublattice.offset] * source[:, None]
    # c_j = (1/L) sum_k exp(ikj) c_k; ifft index 0 holds j = L.
    return np.roll(np.fft.ifft(c_k, axis=0), -1, axis=0)


def bound_state_wavefunction(
    params: BathParams, attach: EmitterAttachment | Sequence[EmitterAttachment],
    E_b: complex, L: int, c_e: ArrayLike | None = None
) -> Wavefunction:
    """Real-space bound state on a ring of `L` cells, normalized to unity with
    the first emitter amplitude real and positive."""
    attachments = [attach] if isinstance(attach, EmitterAttachment) else list(attach)
    for e in attachments:
        e.check(L)
    distance = spectrum_distance(params, E_b, max(L, 64))
    if distance < ON_SPECTRUM:
        raise OnSpectrum(E_b, distance)

    amplitudes = np.ones(1, dtype=np.complex128) if c_e is None \
        else np.asarray(c_e, dtype=np.complex128)
    photons = ring_profile(params, attachments, E_b, amplitudes, L)
    return Wavefunction(amplitudes.copy(), photons).normalized().aligned()


def ring_residual(
    params: BathParams, attachments: Sequence[EmitterAttachment], E_b: complex,
    psi: Wavefunction
) -> float:
    """||(H_PBC - E_b) psi|| on the ring the wavefunction lives on."""
    ring = params.with_size(psi.L).with_boundary(Boundary.PBC)
    v = psi.to_vector()
    return float(np.linalg.norm(apply_system(ring, attachments, v) - E_b * v))
