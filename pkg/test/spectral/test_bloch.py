import numpy as np
import pytest

from nhbath.spectral import (
    band_separation, line_gap, pbc_bands, point_gap_winding, spectrum_distance)
from nhbath.errors.numeric import InvalidParameter, OnSpectrum


def test_line_gap(line_gap_params, balanced_params):
    assert line_gap(line_gap_params) > 0
    # the two loops touch at J1 = kappa/2
    assert line_gap(balanced_params) == pytest.approx(0, abs=1e-12)
    assert band_separation(line_gap_params) > 1


def test_band_shape(line_gap_params):
    ks, energies = pbc_bands(line_gap_params, 64)
    assert ks.shape == (64,)
    assert energies.shape == (64, 2)
    assert np.allclose(energies.sum(axis=1), -1.2j)
    with pytest.raises(InvalidParameter):
        _ = pbc_bands(line_gap_params, 2)


def test_point_gap_winding(balanced_params, line_gap_params):
    assert abs(point_gap_winding(balanced_params, 0.2 - 0.4j)) == 1
    assert point_gap_winding(balanced_params, 5.0) == 0
    assert point_gap_winding(line_gap_params, -0.6j) == 0


def test_on_spectrum(balanced_params):
    _, energies = pbc_bands(balanced_params, 2048)
    E = complex(energies[100, 0])
    assert spectrum_distance(balanced_params, E) < 1e-12
    with pytest.raises(OnSpectrum):
        _ = point_gap_winding(balanced_params, E)
