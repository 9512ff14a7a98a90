"""Dressed states from the full complex eigenproblem; works for any gamma."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..model import (
    BathParams, Boundary, EmitterAttachment, SystemMatrix, Wavefunction, build_bath,
    build_system)
from ..spectral import ComplexSpectrum, obc_spectrum
from ..errors.numeric import NoInGapState
from ..logging import logger
from .result import DressedStateResult

log = logger()

EMITTER_WEIGHT_THRESHOLD = 1e-6


def bulk_gap(params: BathParams) -> tuple[float, float]:
    """Real parts of the two OBC bath eigenvalues closest to the band centre
    from below and from above."""
    re = np.sort(obc_spectrum(build_bath(params.with_boundary(Boundary.OBC))).eigenvalues.real)
    return float(re[params.L - 1]), float(re[params.L])


def in_gap_state(
    system: SystemMatrix, gap: tuple[float, float], kappa: float,
    spectrum: ComplexSpectrum | None = None
) -> DressedStateResult:
    """Eigenpair with Re E_d inside `gap` and the largest emitter weight."""
    if spectrum is None:
        spectrum = obc_spectrum(system)
    weights = spectrum.projector_weights(slice(0, system.n_emitters))
    re = spectrum.eigenvalues.real
    candidates = np.flatnonzero((re > gap[0]) & (re < gap[1]) & (weights > EMITTER_WEIGHT_THRESHOLD))
    if candidates.size == 0:
        raise NoInGapState(gap)
    if candidates.size > 1:
        log.debug("%d in-gap candidates, picking the most emitter-like", candidates.size)
    m = candidates[np.argmax(weights[candidates])]

    E_d = complex(spectrum.eigenvalues[m])
    psi = Wavefunction.from_vector(spectrum.right_vectors[:, m], system.n_emitters).normalized().aligned()
    v = psi.to_vector()
    residual = float(np.linalg.norm(system.entries @ v - E_d * v))
    E = (E_d + 0.5j * kappa).real
    return DressedStateResult(E, E_d, psi, complex(psi.c_e[0]), True, residual)


def dressed_state_numeric(
    params: BathParams, attach: EmitterAttachment, delta0: float, gamma: float, g: float
) -> DressedStateResult:
    """In-gap dressed state of one emitter on the open chain."""
    params = params.with_boundary(Boundary.OBC)
    attach = attach.replace(delta0=delta0, gamma=gamma, g=g)
    return in_gap_state(build_system(params, [attach]), bulk_gap(params), params.kappa)


def dressed_profile_sweep(
    params: BathParams, attach: EmitterAttachment, delta0: float,
    gamma_grid: Sequence[float], g: float
) -> list[tuple[float, DressedStateResult]]:
    """In-gap states for a range of emitter decay rates."""
    return [(gamma, dressed_state_numeric(params, attach, delta0, gamma, g)) for gamma in gamma_grid]


def subsystem_cut(params: BathParams, attach: EmitterAttachment) -> SystemMatrix:
    """The coupled system with the J2 bond between b_{j0-1} and a_{j0} removed,
    splitting the chain into the part left of the emitter and the rest."""
    params = params.with_boundary(Boundary.OBC)
    system = build_system(params, [attach])
    if attach.unit_cell == 1:
        return system
    n = system.n_emitters
    a = n + 2 * (attach.unit_cell - 1)
    b = a - 1
    entries = system.entries.copy()
    entries[a, b] = entries[b, a] = 0
    return SystemMatrix(entries, system.basis_order, n)


def cut_overlap(
    params: BathParams, attach: EmitterAttachment, delta0: float, gamma: float, g: float
) -> float:
    """|<psi_cut|psi>| between the in-gap states with and without the cut."""
    params = params.with_boundary(Boundary.OBC)
    attach = attach.replace(delta0=delta0, gamma=gamma, g=g)
    gap = bulk_gap(params)
    full = in_gap_state(build_system(params, [attach]), gap, params.kappa)
    cut = in_gap_state(subsystem_cut(params, attach), gap, params.kappa)
    return float(abs(np.vdot(cut.wavefunction.to_vector(), full.wavefunction.to_vector())))
