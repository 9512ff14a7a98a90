from .trajectory import Trajectory, decay_probability, evolve, propagate
from .bath_modes import BathModes, bath_modes
from .resolvent import (
    ResolventData, cluster_residues, emitter_amplitudes_resolvent, exchange_asymmetry,
    level_shift, resolvent_data, system_poles, two_emitter_greens)

__all__ = [
    "Trajectory", "decay_probability", "evolve", "propagate", "BathModes", "bath_modes",
    "ResolventData", "cluster_residues", "emitter_amplitudes_resolvent", "exchange_asymmetry",
    "level_shift", "resolvent_data", "system_poles", "two_emitter_greens",
]
