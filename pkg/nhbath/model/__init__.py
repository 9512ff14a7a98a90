from .params import BathParams, Boundary, EmitterAttachment, Sublattice
from .system_matrix import SystemMatrix, basis_labels
from .wavefunction import NormConvention, Wavefunction
from .hamiltonian import (
    apply_system, bloch_band_offset, bloch_hamiltonians, build_bath, build_bloch,
    build_system)

__all__ = [
    "BathParams", "Boundary", "EmitterAttachment", "Sublattice", "SystemMatrix",
    "basis_labels", "NormConvention", "Wavefunction", "apply_system",
    "bloch_band_offset", "bloch_hamiltonians", "build_bath", "build_bloch",
    "build_system",
]
