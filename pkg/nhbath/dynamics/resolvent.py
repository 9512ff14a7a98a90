"""Constrained propagator of two emitters from the level-shift operator.

With P projecting on the emitters and the bath modes (E_m, R_m, L_m),

    Sigma_pq(z) = g_p g_q sum_m R_m(site_p) conj(L_m(site_q)) / (z - E_m),
    G_p(z) = [z - Delta - Sigma(z)]^{-1}.

In the Hermitian frame the mode sum is symmetric; the lab frame multiplies
entry (p, q) by the asymmetry factor F(p, q) = r^{(j_p + [b]) - (j_q + [b])}.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray
import scipy.linalg

from ..model import BathParams, Boundary, EmitterAttachment, Wavefunction, build_system
from ..spectral import clusters
from ..errors.numeric import NoConvergence, PreconditionViolated, SingularMatrix
from ..logging import logger
from .bath_modes import BathModes, bath_modes

log = logger()

GAMMA_TOLERANCE = 1e-12
SINGULAR_CONDITION = 1e14
POLE_CLUSTER_TOLERANCE = 1e-8
CONTOUR_POINTS = 64
RESIDUE_TOLERANCE = 1e-8


@dataclass(frozen=True)
class ResolventData:
    """G_p(z), the Hermitian-frame mode sum T(z) between the two emitters and
    the asymmetry factor F between them."""
    G_p: Callable[[complex], NDArray[np.complex128]]
    T: Callable[[complex], complex]
    F: float


def exchange_asymmetry(params: BathParams, attach1: EmitterAttachment, attach2: EmitterAttachment) -> float:
    """F = ((J1 + kappa/2)/(J1 - kappa/2))^{(j1 - j2 + [a1 = b] - [a2 = b]) / 2}, defined
    for J1 > kappa/2 only."""
    if not params.J1 > params.kappa / 2:
        raise PreconditionViolated(
            f"the exchange asymmetry needs J1 > kappa/2, got J1 = {params.J1}, kappa = {params.kappa}")
    return math.sqrt(params.nonreciprocity) ** (attach1.cell_offset - attach2.cell_offset)


def _sites(params: BathParams, attachments: Sequence[EmitterAttachment]) -> list[int]:
    return [e.site_index(params.L) for e in attachments]


def level_shift(
    params: BathParams, attachments: Sequence[EmitterAttachment], modes: BathModes, z: complex,
    power: int = 1
) -> NDArray[np.complex128]:
    """Sigma(z); with `power = 2` the mode sum of 1/(z - E_m)^2, i.e. -dSigma/dz."""
    sites = _sites(params, attachments)
    g = np.array([e.g for e in attachments])
    right = modes.right[sites, :]
    left = modes.left[sites, :].conj()
    denominator = (z - modes.energies) ** power
    return (g[:, None] * g[None, :]) * np.einsum("pm,qm,m->pq", right, left, 1 / denominator)


def _check(attachments: Sequence[EmitterAttachment], params: BathParams):
    for e in attachments:
        e.check(params.L)
        if abs(e.gamma - params.kappa) > GAMMA_TOLERANCE:
            raise PreconditionViolated(f"the resolvent path needs gamma = kappa, got gamma = {e.gamma}")


def _propagator_matrix(
    params: BathParams, attachments: Sequence[EmitterAttachment], modes: BathModes, E: complex
) -> NDArray[np.complex128]:
    return np.diag([E - e.delta for e in attachments]) - level_shift(params, attachments, modes, E)


def two_emitter_greens(
    params: BathParams, attach1: EmitterAttachment, attach2: EmitterAttachment, E: complex
) -> NDArray[np.complex128]:
    attachments = [attach1, attach2]
    _check(attachments, params)
    modes = bath_modes(params)
    return _greens(params, attachments, modes, E)


def _greens(
    params: BathParams, attachments: Sequence[EmitterAttachment], modes: BathModes, E: complex
) -> NDArray[np.complex128]:
    if np.min(np.abs(E - modes.energies)) < 1e-12:
        raise SingularMatrix(E, math.inf)
    m = _propagator_matrix(params, attachments, modes, E)
    condition = float(np.linalg.cond(m))
    if not condition < SINGULAR_CONDITION:
        raise SingularMatrix(E, condition)
    return np.linalg.inv(m)


def resolvent_data(
    params: BathParams, attach1: EmitterAttachment, attach2: EmitterAttachment
) -> ResolventData:
    attachments = [attach1, attach2]
    _check(attachments, params)
    modes = bath_modes(params)
    F = exchange_asymmetry(params, attach1, attach2)

    def T(z: complex) -> complex:
        return complex(level_shift(params, attachments, modes, z)[0, 1] / F)

    return ResolventData(lambda z: _greens(params, attachments, modes, z), T, F)


def system_poles(params: BathParams, attachments: Sequence[EmitterAttachment]) -> NDArray[np.complex128]:
    """Eigenvalues of the coupled open system. The matrix is balanced first;
    the site scaling of the nonreciprocal chain leaves the raw eigenvalues
    badly conditioned."""
    entries, _ = scipy.linalg.matrix_balance(build_system(params, attachments).entries, permute=False)
    return scipy.linalg.eigvals(entries, check_finite=False).astype(np.complex128)


def cluster_residues(
    params: BathParams, attachments: Sequence[EmitterAttachment], modes: BathModes,
    poles: NDArray[np.complex128]
) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    """Centers of the clusters of (nearly) coincident poles and the residue of
    G_p summed over each, shapes (n,) and (n, 2, 2).

    The residue is the mean of (z - c) G_p(z) on a circle around the center c
    that stays clear of every other pole. This also covers a double zero of
    det M where M itself vanishes, as for two emitters on the same sublattice.
    """
    phases = np.exp(2j * np.pi * np.arange(CONTOUR_POINTS) / CONTOUR_POINTS)
    centers: list[complex] = []
    residues: list[NDArray[np.complex128]] = []
    for idx in clusters(poles, POLE_CLUSTER_TOLERANCE):
        c = complex(np.mean(poles[idx]))
        spread = float(np.max(np.abs(poles[idx] - c)))
        others = np.delete(poles, idx)
        reach = float(np.min(np.abs(others - c))) if others.size else 1.0 + 2 * spread
        radius = (spread + reach) / 2
        samples = [(z - c) * np.linalg.inv(_propagator_matrix(params, attachments, modes, z))
                   for z in c + radius * phases]
        centers.append(c)
        residues.append(np.mean(samples, axis=0))
    return np.array(centers), np.array(residues)


def emitter_amplitudes_resolvent(
    params: BathParams, attach1: EmitterAttachment, attach2: EmitterAttachment,
    psi0: Wavefunction | ArrayLike, times: ArrayLike
) -> NDArray[np.complex128]:
    """c_e(t) = sum_n exp(-i z_n t) Res_{z_n} G_p c_e(0), shape (2, n_times).

    The poles z_n are the eigenvalues of the full finite system, all below the
    real axis. Their residues sum to the identity since G_p(z) ~ 1/z at large z.
    """
    attachments = [attach1, attach2]
    _check(attachments, params)
    params = params.with_boundary(Boundary.OBC)
    c0 = psi0.c_e if isinstance(psi0, Wavefunction) else np.asarray(psi0, dtype=np.complex128)
    t = np.asarray(times, dtype=np.float64)
    deltas = np.array([e.delta for e in attachments])

    if all(e.g == 0 for e in attachments):
        return np.exp(-1j * np.outer(deltas, t)) * c0[:, None]

    modes = bath_modes(params)
    centers, residues = cluster_residues(params, attachments, modes, system_poles(params, attachments))
    error = float(np.max(np.abs(residues.sum(axis=0) - np.eye(2))))
    if not error < RESIDUE_TOLERANCE:
        raise NoConvergence(f"residue sum of G_p (off the identity by {error:.2e})")
    log.debug("%d pole clusters, residues sum to the identity within %.2e", centers.size, error)

    weights = residues @ c0
    return weights.T @ np.exp(-1j * np.outer(centers, t))
