"""Real-space and Bloch representations of the bath and of the coupled
emitter-bath system in the single-excitation subspace."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .params import BathParams, Boundary, EmitterAttachment
from .system_matrix import SystemMatrix, basis_labels
from ..errors.numeric import InvalidParameter


def build_bath(params: BathParams) -> SystemMatrix:
    """Photon-only matrix of dimension 2L. Intracell hops are nonreciprocal,
    J1 - kappa/2 from `b_j` to `a_j` and J1 + kappa/2 back; the diagonal
    carries the uniform loss -i kappa/2."""
    L = params.L
    m = np.zeros((2 * L, 2 * L), dtype=np.complex128)
    a = 2 * np.arange(L)
    b = a + 1
    m[a, b] = params.j1_minus
    m[b, a] = params.j1_plus
    m[b[:-1], a[1:]] = params.J2
    m[a[1:], b[:-1]] = params.J2
    if params.boundary is Boundary.PBC:
        m[b[-1], a[0]] += params.J2
        m[a[0], b[-1]] += params.J2
    m[np.diag_indices(2 * L)] = params.uniform_loss
    return SystemMatrix(m, basis_labels(0, L), 0)


def build_bloch(params: BathParams, k: float) -> NDArray[np.complex128]:
    """The 2x2 Bloch Hamiltonian at momentum `k`."""
    return bloch_hamiltonians(params, np.array([k]))[0]


def bloch_hamiltonians(params: BathParams, ks: ArrayLike) -> NDArray[np.complex128]:
    """Bloch Hamiltonians stacked along the first axis, shape (nk, 2, 2)."""
    k = np.asarray(ks, dtype=np.float64)
    h = np.zeros(k.shape + (2, 2), dtype=np.complex128)
    h[..., 0, 0] = params.uniform_loss
    h[..., 1, 1] = params.uniform_loss
    h[..., 0, 1] = params.j1_minus + params.J2 * np.exp(-1j * k)
    h[..., 1, 0] = params.j1_plus + params.J2 * np.exp(1j * k)
    return h


def bloch_band_offset(params: BathParams, ks: ArrayLike) -> NDArray[np.complex128]:
    """s(k) with E = -i kappa/2 +- s(k); principal square root of the product
    of the two off-diagonal Bloch elements."""
    k = np.asarray(ks, dtype=np.float64)
    product = (params.j1_minus + params.J2 * np.exp(-1j * k)) \
        * (params.j1_plus + params.J2 * np.exp(1j * k))
    return np.sqrt(product)


def _check_emitters(params: BathParams, emitters: Sequence[EmitterAttachment]):
    sites = [e.site_index(params.L) for e in emitters]
    if len(set(sites)) != len(sites):
        raise InvalidParameter("emitters", sites, "distinct attachment sites")


def build_system(params: BathParams, emitters: Sequence[EmitterAttachment]) -> SystemMatrix:
    """Block matrix [[diag(Delta), V], [V^T, H_p]] with V coupling every emitter
    to its own site with strength `g`."""
    _check_emitters(params, emitters)
    n = len(emitters)
    bath = build_bath(params)
    m = np.zeros((n + bath.dim, n + bath.dim), dtype=np.complex128)
    m[n:, n:] = bath.entries
    for i, e in enumerate(emitters):
        s = n + e.site_index(params.L)
        m[i, i] = e.delta
        m[i, s] = e.g
        m[s, i] = e.g
    return SystemMatrix(m, basis_labels(n, params.L), n)


def apply_system(
    params: BathParams, emitters: Sequence[EmitterAttachment], vector: ArrayLike
) -> NDArray[np.complex128]:
    """Apply the coupled Hamiltonian without forming it. Agrees with
    `build_system(params, emitters).entries @ vector`."""
    n = len(emitters)
    v = np.asarray(vector, dtype=np.complex128)
    ce = v[:n]
    c = v[n:].reshape(params.L, 2)
    ca, cb = c[:, 0], c[:, 1]

    out_a = params.uniform_loss * ca + params.j1_minus * cb
    out_b = params.uniform_loss * cb + params.j1_plus * ca
    out_a[1:] += params.J2 * cb[:-1]
    out_b[:-1] += params.J2 * ca[1:]
    if params.boundary is Boundary.PBC:
        out_a[0] += params.J2 * cb[-1]
        out_b[-1] += params.J2 * ca[0]

    photons = np.stack([out_a, out_b], axis=1).reshape(-1)
    out_e = np.zeros(n, dtype=np.complex128)
    for i, e in enumerate(emitters):
        s = e.site_index(params.L)
        out_e[i] = e.delta * ce[i] + e.g * v[n + s]
        photons[s] += e.g * ce[i]
    return np.concatenate([out_e, photons])
