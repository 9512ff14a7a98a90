"""Diagonal similarity transform that maps the nonreciprocal OBC chain onto a
Hermitian SSH chain with uniform loss.

A photon site (j, s) is scaled by r^{(j + [s == b]) - (j0 + [s0 == b])}, so
the intracell hops become sqrt((J1 - kappa/2)(J1 + kappa/2)) in both
directions while J2 and the emitter coupling `g` are unchanged.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import NDArray

from ..model import (
    BathParams, EmitterAttachment, SystemMatrix, basis_labels, build_bath, build_system)
from ..errors.numeric import DegenerateGbz


def similarity_radius(params: BathParams) -> float:
    if not params.J1 > params.kappa / 2:
        raise DegenerateGbz(params.J1, params.kappa)
    return math.sqrt(params.nonreciprocity)


def hermitian_hopping(params: BathParams) -> float:
    """The symmetric intracell hop of the transformed chain."""
    if not params.J1 > params.kappa / 2:
        raise DegenerateGbz(params.J1, params.kappa)
    return math.sqrt(params.j1_minus * params.j1_plus)


def site_exponents(L: int, reference: int = 0) -> NDArray[np.int_]:
    """Exponents j + [s == b] - reference over the photon basis a1, b1, ..."""
    j = np.repeat(np.arange(1, L + 1), 2)
    return j + np.tile([0, 1], L) - reference


def similarity_diagonal(
    params: BathParams, attach: EmitterAttachment | None, n_emitters: int = 1
) -> NDArray[np.float64]:
    """Diagonal of S; emitters carry the scale of the site they couple to,
    which is 1 for the reference emitter."""
    r = similarity_radius(params)
    reference = 0 if attach is None else attach.cell_offset
    photons = r ** site_exponents(params.L, reference).astype(np.float64)
    return np.concatenate([np.ones(n_emitters), photons])


def transform(matrix: SystemMatrix, s: NDArray[np.float64]) -> SystemMatrix:
    """S^{-1} M S for a diagonal S."""
    return SystemMatrix(matrix.entries * (s[None, :] / s[:, None]),
                        matrix.basis_order, matrix.n_emitters)


def similarity_transform(
    params: BathParams, attach: EmitterAttachment
) -> tuple[NDArray[np.float64], SystemMatrix]:
    s = similarity_diagonal(params, attach)
    return s, transform(build_system(params, [attach]), s)


def hermitian_frame_bath(params: BathParams) -> SystemMatrix:
    """SSH chain with hops (J1bar, J2) and the uniform diagonal -i kappa/2."""
    hermitian = BathParams(hermitian_hopping(params), params.J2, 0.0, params.L, params.boundary)
    bath = build_bath(hermitian)
    entries = bath.entries + params.uniform_loss * np.eye(bath.dim)
    return SystemMatrix(entries, bath.basis_order, 0)


def hermitian_frame_system(params: BathParams, attach: EmitterAttachment) -> SystemMatrix:
    bath = hermitian_frame_bath(params)
    n = 1
    m = np.zeros((bath.dim + n, bath.dim + n), dtype=np.complex128)
    m[n:, n:] = bath.entries
    s = n + attach.site_index(params.L)
    m[0, 0] = attach.delta
    m[0, s] = m[s, 0] = attach.g
    return SystemMatrix(m, basis_labels(n, params.L), n)
