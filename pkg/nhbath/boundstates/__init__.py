from .self_energy import self_energy, self_energy_matrix, self_energy_on_grid, bath_resolvent
from .reconstruction import bound_state_wavefunction, ring_residual
from .analytic import (
    atomic_weight, balanced_profile, balanced_self_energy, chiral_bound_state_analytic, eta,
    hidden_bound_state_analytic, is_interior, momentum_sum_weight)
from .solver import BoundStateKind, BoundStateResult, SearchRegion, classify, solve_bound_states

__all__ = [
    "self_energy", "self_energy_matrix", "self_energy_on_grid", "bath_resolvent",
    "bound_state_wavefunction", "ring_residual", "atomic_weight", "balanced_profile", "balanced_self_energy",
    "chiral_bound_state_analytic", "eta", "hidden_bound_state_analytic", "is_interior",
    "momentum_sum_weight", "BoundStateKind", "BoundStateResult", "SearchRegion", "classify",
    "solve_bound_states",
]
