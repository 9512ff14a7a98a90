import numpy as np
import pytest

from nhbath.model import BathParams, Boundary, EmitterAttachment, Sublattice
from nhbath.boundstates import (
    BoundStateKind, SearchRegion, atomic_weight, bound_state_wavefunction, chiral_bound_state_analytic,
    eta, hidden_bound_state_analytic, momentum_sum_weight, solve_bound_states)


def test_chiral_bound_state(line_gap_params):
    attach = EmitterAttachment(20, Sublattice.A, g=0.5, gamma=1.2)
    results = solve_bound_states(
        line_gap_params, attach, None, SearchRegion.around(-0.6j, 0.5), n_seeds=6)
    centre = [r for r in results if abs(r.E_b + 0.6j) < 1e-8]
    assert len(centre) == 1
    state = centre[0]
    assert state.classification is BoundStateKind.LINE_GAP_CHIRAL
    assert state.residual < 1e-8

    b = state.wavefunction.c_photon[:, 1]
    ratio = -1.0 / 1.9
    assert b[20] / b[19] == pytest.approx(ratio, rel=1e-8)
    assert b[21] / b[20] == pytest.approx(ratio, rel=1e-8)

    weights = state.wavefunction.weights()
    total = weights.sum()
    assert weights[:, 0].sum() < 1e-10 * total
    assert weights[:19, 1].sum() < 1e-10 * total


def test_chiral_analytic(line_gap_params):
    params = line_gap_params.with_boundary(Boundary.OBC)
    psi = chiral_bound_state_analytic(params, EmitterAttachment(10, Sublattice.A, gamma=1.2))
    b = psi.c_photon[:, 1]
    assert b[10] / b[9] == pytest.approx(-1 / 1.9, rel=1e-12)
    assert np.all(psi.c_photon[:, 0] == 0)
    assert np.all(b[:9] == 0)
    assert psi.norm() == pytest.approx(1.0)


def test_hidden_bound_state(balanced_params):
    delta = 0.2 - 0.4j
    assert abs(eta(balanced_params, delta)) == pytest.approx(1.19618, abs=1e-5)

    for sublattice in Sublattice:
        attach = EmitterAttachment(20, sublattice, g=0.5)
        results = solve_bound_states(
            balanced_params, attach, delta, SearchRegion.around(delta, 0.15), n_seeds=4)
        hidden = [r for r in results if abs(r.E_b - delta) < 1e-10]
        assert len(hidden) == 1
        assert hidden[0].classification is BoundStateKind.POINT_GAP_HIDDEN

        a = hidden[0].wavefunction.c_photon[:, 0]
        assert a[17] / a[18] == pytest.approx(1 / eta(balanced_params, delta), rel=1e-6)


@pytest.mark.parametrize("sublattice", [Sublattice.A, Sublattice.B])
def test_hidden_matches_closed_form(balanced_params, sublattice: Sublattice):
    # |eta| ~ 6.3: the cloud wrapping round the 40-cell ring is negligible
    delta = 0.9 - 0.6j
    attach = EmitterAttachment(20, sublattice, g=0.5)
    results = solve_bound_states(
        balanced_params, attach, delta, SearchRegion.around(delta, 0.1), n_seeds=4)
    hidden = [r for r in results if abs(r.E_b - delta) < 1e-10]
    assert len(hidden) == 1

    E_b = hidden[0].E_b
    numeric = bound_state_wavefunction(balanced_params, attach, E_b, 40)
    closed = hidden_bound_state_analytic(balanced_params.with_boundary(Boundary.OBC), attach, E_b)
    assert abs(numeric.c_e[0] - closed.c_e[0]) < 1e-8
    assert np.max(np.abs(numeric.c_photon[:, 0] - closed.c_photon[:, 0])) < 1e-8
    assert np.max(np.abs(numeric.c_photon[:, 1] - closed.c_photon[:, 1])) < 1e-8


@pytest.mark.parametrize("sublattice", [Sublattice.A, Sublattice.B])
def test_hidden_left_sided(balanced_params, sublattice: Sublattice):
    params = balanced_params.with_boundary(Boundary.OBC)
    attach = EmitterAttachment(30, sublattice, g=0.5, delta0=0.2, gamma=0.8)
    psi = hidden_bound_state_analytic(params, attach, attach.delta)
    assert psi.right_weight(30) == 0
    assert psi.left_weight(30) > 0.1


def test_atomic_weight_closed_form(balanced_params):
    rng = np.random.default_rng(11)
    checked = 0
    while checked < 50:
        E = complex(rng.uniform(-3, 3), rng.uniform(-3, 1.5))
        if abs(abs(eta(balanced_params, E)) - 1) < 0.2:
            continue
        for sublattice in Sublattice:
            attach = EmitterAttachment(20, sublattice, g=0.5)
            closed = atomic_weight(balanced_params, attach, E)
            assert closed == pytest.approx(momentum_sum_weight(balanced_params, attach, E), abs=1e-8)
            assert 0 < closed <= 1
        checked += 1


def test_atomic_weight_momentum_sum(line_gap_params):
    weight = atomic_weight(line_gap_params, EmitterAttachment(20, g=0.5), -0.6j)
    assert 0 < weight < 1


def test_decoupled_partner(line_gap_params):
    """A second emitter with g = 0 leaves the chiral bound state of the first alone."""
    emitters = [EmitterAttachment(20, g=0.5, gamma=1.2), EmitterAttachment(25, g=0.0, delta0=3.0, gamma=1.2)]
    results = solve_bound_states(
        line_gap_params, emitters, None, SearchRegion.around(-0.6j, 0.5), n_seeds=6)
    centre = [r for r in results if abs(r.E_b + 0.6j) < 1e-8]
    assert len(centre) == 1
    psi = centre[0].wavefunction
    assert psi.n_emitters == 2
    assert abs(psi.c_e[1]) < 1e-12
    assert centre[0].residual < 1e-8
