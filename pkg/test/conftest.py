import pytest

from nhbath.model import BathParams, Boundary


@pytest.fixture
def line_gap_params() -> BathParams:
    """Line-gapped PBC bath, J1 = 2.5, kappa = 1.2."""
    return BathParams(2.5, 1.0, 1.2, 40, Boundary.PBC)


@pytest.fixture
def balanced_params() -> BathParams:
    """PBC bath at J1 = kappa/2 = 0.6, a single point-gap loop."""
    return BathParams(0.6, 1.0, 1.2, 40, Boundary.PBC)


@pytest.fixture
def transition_params() -> BathParams:
    """Open chain on the line J2 = J1 - kappa/2: J1 = 1.6, kappa = 1.2, L = 20."""
    return BathParams(1.6, 1.0, 1.2, 20, Boundary.OBC)


@pytest.fixture
def dynamics_params() -> BathParams:
    """Open chain with J1 = 1.2, kappa = 0.4, L = 100."""
    return BathParams(1.2, 1.0, 0.4, 100, Boundary.OBC)
