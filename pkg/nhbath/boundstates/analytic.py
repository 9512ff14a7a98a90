"""Closed-form bound states: chiral states in the line gap at Delta = -i kappa/2
and hidden states inside the point gap at J1 = kappa/2.

At J1 = kappa/2 the k-sums reduce to geometric series in
eta = kappa J2 / (w^2 - J2^2), w = E_b + i kappa/2. Inside the point gap
(|eta| > 1) the photon cloud sits left of the emitter, outside it sits right.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from ..model import BathParams, EmitterAttachment, Sublattice, Wavefunction
from ..errors.numeric import OnSpectrum, PreconditionViolated
from .self_energy import DEFAULT_GRID, MAX_GRID, TOLERANCE, bath_resolvent, ring_momenta
from ..logging import logger

log = logger()

DELTA_TOLERANCE = 1e-12


def _powers(base: complex, exponents: NDArray[np.int_], mask: NDArray[np.bool_]) -> NDArray[np.complex128]:
    safe = np.where(mask, exponents, 0)
    return np.where(mask, np.power(complex(base), safe), 0)


def chiral_bound_state_analytic(params: BathParams, attach: EmitterAttachment) -> Wavefunction:
    """Chiral bound state of an emitter with Delta = -i kappa/2 in the line gap,
    on the cells 1..L. Sublattice `a` gives a cloud on the `b` sites right of
    the emitter, sublattice `b` one on the `a` sites to its left."""
    attach.check(params.L)
    if abs(attach.delta - params.uniform_loss) > DELTA_TOLERANCE:
        raise PreconditionViolated(
            f"chiral bound state needs Delta = -i kappa/2, got {attach.delta}")

    hop = params.j1_minus if attach.sublattice is Sublattice.A else params.j1_plus
    if not abs(params.J2) < abs(hop):
        raise PreconditionViolated(
            f"no line gap for sublattice {attach.sublattice}: |J2| >= {abs(hop)}")

    j = np.arange(1, params.L + 1)
    j0 = attach.unit_cell
    photons = np.zeros((params.L, 2), dtype=np.complex128)
    if attach.sublattice is Sublattice.A:
        photons[:, 1] = -(attach.g / hop) * _powers(-params.J2 / hop, j - j0, j >= j0)
    else:
        photons[:, 0] = -(attach.g / hop) * _powers(-params.J2 / hop, j0 - j, j <= j0)
    return Wavefunction(np.ones(1, dtype=np.complex128), photons).normalized()


def _check_balanced(params: BathParams):
    if abs(params.j1_minus) > DELTA_TOLERANCE * (1 + abs(params.J1)) or params.kappa == 0:
        raise PreconditionViolated(
            f"closed-form point-gap states need J1 = kappa/2 > 0, got J1 = {params.J1}, "
            f"kappa = {params.kappa}")
    if params.J2 == 0:
        raise PreconditionViolated("closed-form point-gap states need J2 != 0")


def eta(params: BathParams, E_b: complex) -> complex:
    w = E_b - params.uniform_loss
    return params.kappa * params.J2 / (w * w - params.J2**2)


def is_interior(params: BathParams, E_b: complex) -> bool:
    """|kappa J2| > |J2^2 - (E_b + i kappa/2)^2|: inside the point-gap loop."""
    w = E_b - params.uniform_loss
    return abs(params.kappa * params.J2) > abs(params.J2**2 - w * w)


def balanced_self_energy(params: BathParams, attach: EmitterAttachment, z: complex) -> complex:
    """Sigma(z) at J1 = kappa/2 on the infinite lattice: zero inside the point
    gap, g^2 w / (w^2 - J2^2) outside it, for either sublattice."""
    _check_balanced(params)
    w = z - params.uniform_loss
    if abs(abs(w * w - params.J2**2) - abs(params.kappa * params.J2)) < DELTA_TOLERANCE:
        raise OnSpectrum(z, 0.0)
    if is_interior(params, z):
        return 0j
    return complex(attach.g**2 * w / (w * w - params.J2**2))


def balanced_profile(params: BathParams, attach: EmitterAttachment, E_b: complex) -> NDArray[np.complex128]:
    """Photon amplitudes for c_e = 1 at J1 = kappa/2, shape (L, 2), both for
    E_b inside and outside the point gap."""
    _check_balanced(params)
    g, k, J2 = attach.g, params.kappa, params.J2
    w = E_b - params.uniform_loss
    c = w * w - J2**2
    d = k * J2
    h = d / c
    j = np.arange(1, params.L + 1)
    j0 = attach.unit_cell
    out = np.zeros((params.L, 2), dtype=np.complex128)

    if is_interior(params, E_b):
        if attach.sublattice is Sublattice.A:
            left = j <= j0 - 1
            out[:, 0] = -(w * g / d) * _powers(h, j - j0 + 1, left)
            out[:, 1] = -(g / J2) * _powers(h, j - j0 + 1, left) \
                - (g / k) * _powers(h, j - j0 + 2, j <= j0 - 2)
        else:
            out[:, 0] = -(g / k) * _powers(h, j - j0, j <= j0)
            out[:, 1] = -(w * g / d) * _powers(h, j - j0 + 1, j <= j0 - 1)
    else:
        if attach.sublattice is Sublattice.A:
            out[:, 0] = (w * g / c) * _powers(h, j - j0, j >= j0)
            out[:, 1] = (g * J2 / c) * _powers(h, j - j0 + 1, j >= j0 - 1) \
                + (g * k / c) * _powers(h, j - j0, j >= j0)
        else:
            out[:, 0] = (g * J2 / c) * _powers(h, j - j0 - 1, j >= j0 + 1)
            out[:, 1] = (w * g / c) * _powers(h, j - j0, j >= j0)
    return out


def hidden_bound_state_analytic(
    params: BathParams, attach: EmitterAttachment, E_b: complex
) -> Wavefunction:
    """Hidden bound state inside the point gap at J1 = kappa/2, on cells 1..L;
    its photon cloud lies left of the emitter for either sublattice."""
    attach.check(params.L)
    _check_balanced(params)
    if not is_interior(params, E_b):
        raise PreconditionViolated(f"E_b = {E_b} lies outside the point gap")
    photons = balanced_profile(params, attach, E_b)
    return Wavefunction(np.ones(1, dtype=np.complex128), photons).normalized()


def _geometric_weight(params: BathParams, attach: EmitterAttachment, E_b: complex) -> float:
    g, k, J2 = attach.g, params.kappa, params.J2
    w = E_b - params.uniform_loss
    c = w * w - J2**2
    d = k * J2
    h = d / c
    if abs(abs(h) - 1) < 1e-12:
        raise OnSpectrum(E_b, 0.0)

    if abs(h) > 1:
        rho = 1 / abs(h) ** 2
        tail = 1 / (1 - rho)
        if attach.sublattice is Sublattice.A:
            s = abs(w * g / d) ** 2 * tail + (g / J2) ** 2 \
                + abs(g * (1 / J2 + h / k)) ** 2 * rho * tail
        else:
            s = (g / k) ** 2 * tail + abs(w * g / d) ** 2 * tail
    else:
        tail = 1 / (1 - abs(h) ** 2)
        if attach.sublattice is Sublattice.A:
            s = abs(w * g / c) ** 2 * tail + abs(g * J2 / c) ** 2 \
                + abs(g * (k + J2 * h) / c) ** 2 * tail
        else:
            s = abs(g * J2 / c) ** 2 * tail + abs(w * g / c) ** 2 * tail
    return 1 / (1 + s)


def momentum_sum_weight(
    params: BathParams, attach: EmitterAttachment, E_b: complex, L_grid: int = DEFAULT_GRID
) -> float:
    """|c_e|^2 = 1 / (1 + <|(E_b - H_k)^{-1} g_k|^2>_k), converged by doubling."""
    def weight(n: int) -> float:
        r = bath_resolvent(params, E_b, ring_momenta(n))
        column = r[:, :, attach.sublattice.offset] * attach.g
        return 1 / (1 + float(np.mean(np.sum(np.abs(column) ** 2, axis=-1))))

    n = L_grid
    previous = weight(n)
    while n < MAX_GRID:
        n *= 2
        current = weight(n)
        if abs(current - previous) < TOLERANCE:
            return current
        previous = current
    log.warning("atomic weight at `%s` not converged on %d cells", E_b, n)
    return current


def atomic_weight(params: BathParams, attach: EmitterAttachment, E_b: complex) -> float:
    """Emitter population |c_e|^2 of the bound state at E_b on the infinite
    lattice. Closed form at J1 = kappa/2, momentum sum otherwise."""
    try:
        _check_balanced(params)
    except PreconditionViolated:
        return momentum_sum_weight(params, attach, E_b)
    return _geometric_weight(params, attach, E_b)
