from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ..model import BathParams, Boundary, build_bath
from ..spectral import obc_spectrum
from ..dressed import hermitian_hopping, similarity_diagonal, ssh_obc_eigenbasis
from ..errors.numeric import DegenerateGbz, RootCountMismatch
from ..logging import logger

log = logger()


@dataclass(frozen=True)
class BathModes:
    """Eigenmodes of the open bath with `left[:, m].conj() @ right[:, n] == delta(m, n)`."""
    energies: NDArray[np.complex128]
    right: NDArray[np.complex128]
    left: NDArray[np.complex128]
    analytic: bool


def bath_modes(params: BathParams) -> BathModes:
    """Right modes S phi_m and left modes S^{-1} phi_m from the Hermitian SSH
    basis when it exists, the dense eigensolver otherwise."""
    params = params.with_boundary(Boundary.OBC)
    try:
        basis = ssh_obc_eigenbasis(hermitian_hopping(params), params.J2, params.L)
    except (DegenerateGbz, RootCountMismatch) as e:
        log.debug("no analytic bath basis (%s), using the eigensolver", e)
        spectrum = obc_spectrum(build_bath(params))
        return BathModes(spectrum.eigenvalues, spectrum.right_vectors, spectrum.left_vectors, False)

    v = basis.mode_vectors()
    s = similarity_diagonal(params, None, n_emitters=0)
    energies = basis.epsilon + params.uniform_loss
    return BathModes(energies.astype(np.complex128), (s[:, None] * v).astype(np.complex128),
                     (v / s[:, None]).astype(np.complex128), True)
