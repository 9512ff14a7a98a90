from .eigensolver import ComplexSpectrum, clusters, obc_spectrum
from .bloch import (
    band_separation, line_gap, momentum_grid, pbc_bands, pbc_spectrum,
    point_gap_winding, spectrum_distance)
from .gbz import (
    GbzData, gbz_betas, gbz_data, gbz_radius, non_bloch_winding, phase_boundaries,
    q_element, topological_phase, transition_points)

__all__ = [
    "ComplexSpectrum", "clusters", "obc_spectrum", "band_separation", "line_gap", "momentum_grid",
    "pbc_bands", "pbc_spectrum", "point_gap_winding", "spectrum_distance", "GbzData",
    "gbz_betas", "gbz_data", "gbz_radius", "non_bloch_winding", "phase_boundaries",
    "q_element", "topological_phase", "transition_points",
]
