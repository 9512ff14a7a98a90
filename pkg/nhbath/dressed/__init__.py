from .result import DressedStateResult
from .similarity import (
    hermitian_frame_bath, hermitian_frame_system, hermitian_hopping, similarity_diagonal,
    similarity_radius, similarity_transform, transform)
from .ssh_basis import SshObcBasis, ssh_obc_eigenbasis, theta_condition, theta_roots
from .poles import dressed_state_poles, in_gap_pole, pole_roots
from .analytic import chiral_extended_analytic, on_transition_line
from .numeric import (
    bulk_gap, cut_overlap, dressed_profile_sweep, dressed_state_numeric, in_gap_state,
    subsystem_cut)

__all__ = [
    "DressedStateResult", "hermitian_frame_bath", "hermitian_frame_system",
    "hermitian_hopping", "similarity_diagonal", "similarity_radius", "similarity_transform",
    "transform", "SshObcBasis", "ssh_obc_eigenbasis", "theta_condition", "theta_roots",
    "dressed_state_poles", "in_gap_pole", "pole_roots", "chiral_extended_analytic",
    "on_transition_line", "bulk_gap", "cut_overlap", "dressed_profile_sweep",
    "dressed_state_numeric", "in_gap_state", "subsystem_cut",
]
