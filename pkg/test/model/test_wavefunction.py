import numpy as np
import pytest

from nhbath.model import Wavefunction


def test_vector_layout():
    v = np.arange(7, dtype=np.complex128)
    psi = Wavefunction.from_vector(v, 1)
    assert psi.n_emitters == 1
    assert psi.L == 3
    assert psi.c_photon[1, 1] == 4
    assert np.array_equal(psi.to_vector(), v)


def test_weights():
    psi = Wavefunction(np.array([1j]), np.array([[1, 0], [0, 2], [1, 1]], dtype=np.complex128))
    assert psi.emitter_weight == 1
    assert psi.left_weight(2) == 1
    assert psi.right_weight(2) == 2
    n = psi.normalized()
    assert n.norm() == pytest.approx(1.0)
    a = n.aligned()
    assert a.c_e[0].imag == pytest.approx(0.0)
    assert a.c_e[0].real > 0


def test_emitter_excited():
    psi = Wavefunction.emitter_excited(2, 5, which=1)
    assert np.array_equal(psi.c_e, [0, 1])
    assert psi.norm() == 1
