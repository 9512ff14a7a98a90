import numpy as np
import pytest

from nhbath.model import BathParams, Boundary, EmitterAttachment, Sublattice, build_system
from nhbath.errors.numeric import InvalidParameter, PreconditionViolated
from nhbath.disorder import (
    DisorderKind, DisorderSpec, disorder_ensemble, draw_disorder, sample_disorder)


@pytest.fixture
def attach() -> EmitterAttachment:
    return EmitterAttachment(10, Sublattice.A)


@pytest.mark.parametrize("kind", list(DisorderKind))
def test_zero_strength(transition_params, kind):
    spec = DisorderSpec(kind, 0.0, 7, 3)
    assert np.all(sample_disorder(transition_params, spec, 2) == 0)


def test_draws_are_reproducible():
    spec = DisorderSpec(DisorderKind.DIAGONAL, 1.0, 42, 10)
    assert np.array_equal(draw_disorder(spec, 3, 80), draw_disorder(spec, 3, 80))
    assert not np.array_equal(draw_disorder(spec, 3, 80), draw_disorder(spec, 4, 80))
    other = DisorderSpec(DisorderKind.DIAGONAL, 1.0, 43, 10)
    assert not np.array_equal(draw_disorder(spec, 3, 80), draw_disorder(other, 3, 80))


def test_strength_scales_the_same_draws():
    weak = DisorderSpec(DisorderKind.OFF_DIAGONAL, 0.5, 1, 4)
    strong = weak.with_strength(2.0)
    assert np.allclose(4 * draw_disorder(weak, 2, 40), draw_disorder(strong, 2, 40), rtol=1e-15)


def test_draw_moments():
    eps = draw_disorder(DisorderSpec(DisorderKind.DIAGONAL, 2.0, 0, 1), 0, 10**6)
    assert np.all(eps >= -1) and np.all(eps < 1)
    # uniform on [-1, 1): variance 1/3, fourth central moment 1/5
    assert abs(eps.mean()) < 5 * np.sqrt(1 / 3 / 10**6)
    assert abs(eps.var() - 1 / 3) < 5 * np.sqrt((1 / 5 - 1 / 9) / 10**6)


def test_spec_checks():
    with pytest.raises(InvalidParameter):
        DisorderSpec(DisorderKind.DIAGONAL, -0.1, 0, 1)
    with pytest.raises(InvalidParameter):
        DisorderSpec(DisorderKind.DIAGONAL, 0.1, -1, 1)
    with pytest.raises(InvalidParameter):
        DisorderSpec(DisorderKind.DIAGONAL, 0.1, 0, 0)
    with pytest.raises(PreconditionViolated):
        draw_disorder(DisorderSpec(DisorderKind.DIAGONAL, 0.1, 0, 5), 5, 10)


def test_diagonal_disorder(transition_params):
    spec = DisorderSpec(DisorderKind.DIAGONAL, 1.0, 3, 5)
    m = sample_disorder(transition_params, spec, 0)
    assert np.array_equal(np.diag(m), draw_disorder(spec, 0, 40))
    assert np.count_nonzero(m - np.diag(np.diag(m))) == 0


@pytest.mark.parametrize("boundary", list(Boundary))
def test_off_diagonal_disorder(transition_params, boundary):
    params = transition_params.with_boundary(boundary)
    spec = DisorderSpec(DisorderKind.OFF_DIAGONAL, 1.0, 3, 5)
    m = sample_disorder(params, spec, 1)
    eps = draw_disorder(spec, 1, 40)
    assert np.array_equal(m, m.T)
    assert np.all(np.diag(m) == 0)
    assert np.array_equal(np.diag(m, 1)[0::2], eps[0::2])
    assert np.array_equal(np.diag(m, 1)[1::2], eps[1:-1:2])
    corner = eps[-1] if boundary is Boundary.PBC else 0.0
    assert m[0, 39] == m[39, 0] == corner


@pytest.mark.parametrize("kind", list(DisorderKind))
def test_perturbation_keeps_loss(transition_params, attach, kind):
    system = build_system(transition_params, [attach.replace(gamma=1.2)])
    disordered = system.with_photon_perturbation(
        sample_disorder(transition_params, DisorderSpec(kind, 1.5, 9, 2), 1))
    assert np.allclose(disordered.anti_hermitian_part(), system.anti_hermitian_part(), atol=1e-15)


def test_clean_limit(transition_params, attach):
    spec = DisorderSpec(DisorderKind.DIAGONAL, 0.0, 1, 4)
    result = disorder_ensemble(transition_params, attach, 0.2 - 0.6j, 0.5, spec)
    (point,) = result.points
    assert point.found == 4 and point.skipped == 0
    assert np.max(np.abs(point.energies - result.clean.E_d)) < 1e-12
    assert np.max(np.abs(point.mean_weights - result.clean.wavefunction.weights())) < 1e-12
    assert np.max(point.stderr) < 1e-12
    assert point.spectra is None


def test_threads_do_not_change_the_result(transition_params, attach):
    spec = DisorderSpec(DisorderKind.OFF_DIAGONAL, 0.5, 11, 6)
    serial = disorder_ensemble(transition_params, attach, -0.6j, 0.5, spec, [0.25, 0.5])
    pooled = disorder_ensemble(transition_params, attach, -0.6j, 0.5, spec, [0.25, 0.5], threads=3)
    for a, b in zip(serial.points, pooled.points, strict=True):
        assert a.V == b.V
        assert np.array_equal(a.energies, b.energies)
        assert np.array_equal(a.mean_weights, b.mean_weights)
        assert np.array_equal(a.mean_spectrum, b.mean_spectrum)


def test_ensemble_needs_open_chain(transition_params, attach):
    spec = DisorderSpec(DisorderKind.DIAGONAL, 0.5, 0, 2)
    with pytest.raises(PreconditionViolated):
        disorder_ensemble(transition_params.with_boundary(Boundary.PBC), attach, -0.6j, 0.5, spec)


@pytest.mark.parametrize("kind", list(DisorderKind))
@pytest.mark.parametrize("V", [0.5, 1.0, 2.0])
def test_chirality_survives_disorder(kind, V):
    """Emitter on `a` at the transition point, L = 40: the dressed state stays
    on the right of the emitter up to strong disorder."""
    params = BathParams(1.6, 1.0, 1.2, 40)
    n = 100
    spec = DisorderSpec(kind, V, 5, n)
    result = disorder_ensemble(params, EmitterAttachment(20, Sublattice.A), -0.6j, 0.5, spec,
                               keep_spectra=True)
    (point,) = result.points
    assert result.clean.wavefunction.left_weight(20) < 1e-20
    assert point.found / n >= 0.99
    assert point.left_weight(20) < 1e-2
    assert point.spectra is not None and point.spectra.shape == (n, 81)
