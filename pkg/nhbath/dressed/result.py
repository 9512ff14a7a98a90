from __future__ import annotations

from dataclasses import dataclass

from ..model import Wavefunction


@dataclass(frozen=True)
class DressedStateResult:
    """An emitter-dressed eigenstate of the open chain.

    Attributes:
        E: energy in the Hermitian frame, where the uniform loss is removed.
        E_d: lab-frame eigenvalue, E - i kappa/2 when gamma = kappa.
        wavefunction: lab-frame state, normalized, emitter amplitude real.
        cbar_e: emitter amplitude of the normalized Hermitian-frame state.
        in_gap: whether E lies between the two bulk bands.
        residual: ||(H - E_d) psi||.
    """
    E: float
    E_d: complex
    wavefunction: Wavefunction
    cbar_e: complex
    in_gap: bool
    residual: float
