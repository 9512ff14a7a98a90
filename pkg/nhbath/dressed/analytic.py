from __future__ import annotations

import numpy as np

from ..model import BathParams, Boundary, EmitterAttachment, Sublattice, Wavefunction
from ..errors.numeric import PreconditionViolated

TOLERANCE = 1e-12


def on_transition_line(params: BathParams) -> bool:
    """J2 = J1 - kappa/2, where the PBC bands touch at an exceptional point."""
    return abs(params.J2 - params.j1_minus) <= TOLERANCE * (1 + abs(params.J2))


def chiral_extended_analytic(params: BathParams, attach: EmitterAttachment) -> Wavefunction:
    """Dressed state at E_d = Delta = -i kappa/2 on the transition line of an
    open chain. Sublattice `a` puts equal weight on every `b` site from the
    emitter to the right end with alternating sign; sublattice `b` gives a
    cloud on the `a` sites that decays to the left by J2/(J2 + kappa) per cell."""
    attach.check(params.L)
    if params.boundary is not Boundary.OBC:
        raise PreconditionViolated("the extended dressed state lives on an open chain")
    if abs(attach.delta - params.uniform_loss) > TOLERANCE:
        raise PreconditionViolated(f"extended dressed state needs Delta = -i kappa/2, got {attach.delta}")
    if not on_transition_line(params):
        raise PreconditionViolated(
            f"extended dressed state needs J2 = J1 - kappa/2, got J2 = {params.J2}, "
            f"J1 - kappa/2 = {params.j1_minus}")
    if attach.g == 0:
        raise PreconditionViolated("extended dressed state needs g > 0")

    j = np.arange(1, params.L + 1)
    j0 = attach.unit_cell
    photons = np.zeros((params.L, 2), dtype=np.complex128)
    if attach.sublattice is Sublattice.A:
        photons[:, 1] = np.where(j >= j0, (-1.0) ** (j - j0), 0.0)
        c_e = -params.J2 / attach.g
    else:
        ratio = -params.J2 / (params.J2 + params.kappa)
        photons[:, 0] = np.where(j <= j0, ratio ** np.maximum(j0 - j, 0).astype(float), 0.0)
        c_e = -(params.J2 + params.kappa) / attach.g
    return Wavefunction(np.array([c_e], dtype=np.complex128), photons).normalized().aligned()
