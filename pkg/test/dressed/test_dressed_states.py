import numpy as np
import pytest

from nhbath.model import BathParams, Boundary, EmitterAttachment, Sublattice, apply_system, build_bath
from nhbath.errors.numeric import DegenerateGbz, PreconditionViolated, RootCountMismatch
from nhbath.dressed import (
    chiral_extended_analytic, cut_overlap, dressed_profile_sweep, dressed_state_numeric,
    dressed_state_poles, hermitian_frame_bath, hermitian_frame_system, hermitian_hopping,
    in_gap_pole, on_transition_line, similarity_diagonal, similarity_transform,
    ssh_obc_eigenbasis, theta_condition, theta_roots, transform)


def test_similarity_maps_to_hermitian_frame(transition_params):
    attach = EmitterAttachment(10, Sublattice.B, g=0.5, delta0=0.2, gamma=1.2)
    _, lab = similarity_transform(transition_params, attach)
    frame = hermitian_frame_system(transition_params, attach)
    assert np.max(np.abs(lab.entries - frame.entries)) < 1e-12

    shifted = frame.entries[1:, 1:] - transition_params.uniform_loss * np.eye(40)
    assert np.allclose(shifted, shifted.conj().T, atol=1e-14)


def test_bath_similarity(transition_params):
    s = similarity_diagonal(transition_params, None, 0)
    bath = transform(build_bath(transition_params), s)
    assert np.max(np.abs(bath.entries - hermitian_frame_bath(transition_params).entries)) < 1e-12


def test_similarity_needs_real_radius():
    with pytest.raises(DegenerateGbz):
        hermitian_hopping(BathParams(0.5, 1.0, 1.2, 20))


def test_theta_roots(transition_params):
    J1bar = hermitian_hopping(transition_params)
    theta = theta_roots(J1bar, 1.0, 20)
    assert theta.shape == (20,)
    assert np.all((0 < theta) & (theta < np.pi)) and np.all(np.diff(theta) > 0)
    assert np.max(np.abs(theta_condition(J1bar, 1.0, 20, theta))) < 1e-12

    # a topological chain keeps two edge modes with complex theta
    assert theta_roots(0.5, 1.0, 20).shape == (19,)
    with pytest.raises(RootCountMismatch):
        ssh_obc_eigenbasis(0.5, 1.0, 20)


@pytest.mark.parametrize("L", [10, 20, 40])
def test_analytic_ssh_basis(transition_params, L):
    J1bar = hermitian_hopping(transition_params)
    basis = ssh_obc_eigenbasis(J1bar, 1.0, L)
    dense = build_bath(BathParams(J1bar, 1.0, 0.0, L)).entries.real
    assert np.max(np.abs(basis.epsilon - np.linalg.eigvalsh(dense))) < 1e-8

    modes = basis.mode_vectors()
    assert np.allclose(modes.T @ modes, np.eye(2 * L), atol=1e-10)
    assert np.allclose(dense @ modes, modes * basis.epsilon[None, :], atol=1e-8)


def test_transition_line(transition_params):
    assert on_transition_line(transition_params)
    assert not on_transition_line(BathParams(2.5, 1.0, 1.2, 20))


def test_chiral_extended_a(transition_params):
    attach = EmitterAttachment(10, Sublattice.A, g=0.5, gamma=1.2)
    psi = chiral_extended_analytic(transition_params, attach)
    v = psi.to_vector()
    residual = apply_system(transition_params, [attach], v) - attach.delta * v
    assert np.linalg.norm(residual) < 1e-12

    b = np.abs(psi.c_photon[:, 1])
    assert np.all(psi.c_photon[:, 0] == 0)
    assert np.all(b[:9] == 0)
    assert b[9:] == pytest.approx(np.full(11, b[9]), rel=1e-10)
    assert psi.left_weight(10) == 0


def test_chiral_extended_b(transition_params):
    attach = EmitterAttachment(10, Sublattice.B, g=0.5, gamma=1.2)
    psi = chiral_extended_analytic(transition_params, attach)
    v = psi.to_vector()
    residual = apply_system(transition_params, [attach], v) - attach.delta * v
    assert np.linalg.norm(residual) < 1e-12

    a = psi.c_photon[:, 0]
    assert np.all(psi.c_photon[:, 1] == 0)
    assert a[7] / a[8] == pytest.approx(-1 / 2.2, rel=1e-12)
    assert psi.right_weight(10) == 0


def test_chiral_extended_preconditions(transition_params):
    attach = EmitterAttachment(10, g=0.5, gamma=1.2)
    with pytest.raises(PreconditionViolated):
        chiral_extended_analytic(transition_params, attach.replace(gamma=0.4))
    with pytest.raises(PreconditionViolated):
        chiral_extended_analytic(BathParams(2.5, 1.0, 1.2, 20), attach)
    with pytest.raises(PreconditionViolated):
        chiral_extended_analytic(transition_params.with_boundary(Boundary.PBC), attach)


def test_pole_roots_interlace(transition_params):
    attach = EmitterAttachment(10, Sublattice.A, gamma=1.2)
    results = dressed_state_poles(transition_params, attach, 0.2, 0.5)
    assert len(results) == 41
    E = np.array([r.E for r in results])
    eps = ssh_obc_eigenbasis(hermitian_hopping(transition_params), 1.0, 20).epsilon
    assert np.all(E[:-1] < eps) and np.all(eps < E[1:])
    assert sum(r.in_gap for r in results) == 1
    assert max(r.residual for r in results) < 1e-8


@pytest.mark.parametrize("sublattice", [Sublattice.A, Sublattice.B])
@pytest.mark.parametrize("delta0", [0.0, 0.2, 3.0])
def test_pole_matches_numeric(transition_params, sublattice, delta0):
    attach = EmitterAttachment(10, sublattice, gamma=1.2)
    pole = in_gap_pole(transition_params, attach, delta0, 0.5)
    numeric = dressed_state_numeric(transition_params, attach, delta0, 1.2, 0.5)
    assert abs(pole.E_d - numeric.E_d) < 1e-8
    assert pole.E_d.imag == pytest.approx(-0.6, abs=1e-14)
    overlap = abs(np.vdot(pole.wavefunction.to_vector(), numeric.wavefunction.to_vector()))
    assert overlap == pytest.approx(1, abs=1e-6)


def test_pole_needs_matched_decay(transition_params):
    with pytest.raises(PreconditionViolated):
        in_gap_pole(transition_params, EmitterAttachment(10, gamma=0.4), 0.0, 0.5)


def test_cut_leaves_state_intact(transition_params):
    attach = EmitterAttachment(10, Sublattice.A)
    assert cut_overlap(transition_params, attach, 0.0, 1.2, 0.5) > 0.9999


def test_profile_sweep(transition_params):
    attach = EmitterAttachment(10, Sublattice.A)
    sweep = dressed_profile_sweep(transition_params, attach, 0.0, [0.4, 0.8, 1.2], 0.5)
    assert [gamma for gamma, _ in sweep] == [0.4, 0.8, 1.2]
    for _, result in sweep:
        assert result.in_gap
        assert result.residual < 1e-8
        assert result.wavefunction.norm() == pytest.approx(1)
