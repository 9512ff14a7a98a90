"""Roots of the dressed-state pole equation

    E - delta0 - g^2 sum_m phi_m(j0)^2 / ((E - epsilon_m) N_m) = 0

in the Hermitian frame of a chain with gamma = kappa. The left-hand side
increases monotonically between consecutive poles, so there is exactly one
root per interval plus one on either side of the band.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import brentq

from ..model import BathParams, Boundary, EmitterAttachment, Wavefunction, apply_system
from ..errors.numeric import PreconditionViolated
from ..logging import logger
from .result import DressedStateResult
from .similarity import hermitian_hopping, similarity_diagonal
from .ssh_basis import SshObcBasis, ssh_obc_eigenbasis

log = logger()

DECOUPLED = 1e-24
GAMMA_TOLERANCE = 1e-12


def pole_function(
    basis: SshObcBasis, weights: NDArray[np.float64], delta0: float, g: float
):
    def f(E: float) -> float:
        with np.errstate(divide="ignore", invalid="ignore"):
            return float(E - delta0 - g**2 * np.sum(weights / (E - basis.epsilon)))
    return f


def _bracket(f, left: float, right: float, at_left_pole: bool, at_right_pole: bool):
    width = right - left
    for exponent in range(9, 16):
        shift = width * 10.0**-exponent
        a = left + shift if at_left_pole else left
        b = right - shift if at_right_pole else right
        if f(a) < 0 < f(b):
            return a, b
    return None


def pole_roots(basis: SshObcBasis, weights: NDArray[np.float64], delta0: float, g: float) -> list[float]:
    """All 2L + 1 real roots, ascending."""
    eps = basis.epsilon
    if g == 0:
        return sorted([delta0, *eps.tolist()])

    active = weights > DECOUPLED * np.max(weights)
    roots = eps[~active].tolist()
    poles = eps[active]
    f = pole_function(basis, np.where(active, weights, 0.0), delta0, g)

    # f < 0 at the lower edge and f > 0 at the upper one since sum_m weights = 1.
    margin = 1 + g
    edges = [min(delta0, poles[0]) - margin, *poles.tolist(), max(delta0, poles[-1]) + margin]
    last = len(edges) - 2
    for i, (left, right) in enumerate(zip(edges[:-1], edges[1:])):
        bracket = _bracket(f, left, right, i > 0, i < last)
        if bracket is None:
            log.debug("no sign change between %.12g and %.12g", left, right)
            continue
        roots.append(brentq(f, *bracket, xtol=1e-15, rtol=4 * np.finfo(float).eps))
    return sorted(roots)


def _wavefunction(
    params: BathParams, attach: EmitterAttachment, basis: SshObcBasis,
    site_amplitudes: NDArray[np.float64], E: float
) -> tuple[Wavefunction, complex]:
    distance = E - basis.epsilon
    on_pole = np.abs(distance) < 1e-13 * (1 + abs(E))
    cbar_modes = np.zeros_like(basis.epsilon)
    if np.any(on_pole):
        cbar_e = 0.0
        cbar_modes[np.argmin(np.abs(distance))] = 1.0
    elif attach.g > 0:
        cbar_e = 1.0
        cbar_modes = attach.g * site_amplitudes / (np.sqrt(basis.norms) * distance)
    else:
        cbar_e = 1.0

    norm = np.sqrt(cbar_e**2 + np.sum(cbar_modes**2))
    cbar_e, cbar_modes = cbar_e / norm, cbar_modes / norm
    bar_photons = basis.mode_vectors() @ cbar_modes
    s = similarity_diagonal(params, attach)
    lab = np.concatenate([[cbar_e], bar_photons]) * s
    psi = Wavefunction.from_vector(lab.astype(np.complex128), 1).normalized().aligned()
    return psi, complex(cbar_e)


def dressed_state_poles(
    params: BathParams, attach: EmitterAttachment, delta0: float, g: float
) -> list[DressedStateResult]:
    """Dressed states of one emitter on the open chain from the pole equation,
    valid for gamma = kappa and J1 > kappa/2."""
    if abs(attach.gamma - params.kappa) > GAMMA_TOLERANCE:
        raise PreconditionViolated(
            f"the pole equation needs gamma = kappa, got gamma = {attach.gamma}")
    attach = attach.replace(delta0=delta0, g=g)
    attach.check(params.L)
    params = params.with_boundary(Boundary.OBC)

    basis = ssh_obc_eigenbasis(hermitian_hopping(params), params.J2, params.L)
    site = basis.amplitudes_at(attach.unit_cell, attach.sublattice)
    weights = site**2 / basis.norms
    gap = (basis.epsilon[params.L - 1], basis.epsilon[params.L])

    results = []
    for E in pole_roots(basis, weights, delta0, g):
        psi, cbar_e = _wavefunction(params, attach, basis, site, E)
        E_d = E + params.uniform_loss
        v = psi.to_vector()
        residual = float(np.linalg.norm(apply_system(params, [attach], v) - E_d * v))
        results.append(DressedStateResult(E, E_d, psi, cbar_e, bool(gap[0] < E < gap[1]), residual))
    return results


def in_gap_pole(params: BathParams, attach: EmitterAttachment, delta0: float, g: float) -> DressedStateResult:
    """The single root of the pole equation between the two bands."""
    inside = [r for r in dressed_state_poles(params, attach, delta0, g) if r.in_gap]
    if len(inside) != 1:
        raise PreconditionViolated(f"expected one in-gap root, found {len(inside)}")
    return inside[0]
