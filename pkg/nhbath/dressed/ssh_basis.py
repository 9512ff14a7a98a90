from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import brentq

from ..model import Sublattice
from ..errors.numeric import RootCountMismatch

SUBDIVISIONS_PER_CELL = 50
THETA_TOLERANCE = 1e-14


@dataclass(frozen=True)
class SshObcBasis:
    """Analytic eigenbasis of the open Hermitian SSH chain with hops (J1bar, J2).

    Attributes:
        theta: the L quasi-momenta in (0, pi).
        epsilon: the 2L energies, ascending; each theta gives a +- pair.
        mode_theta: theta of each mode.
        phi_a: unnormalized amplitudes on the `a` sites, shape (2L, L).
        phi_b: same on the `b` sites.
        norms: N_m = sum_j phi_a^2 + phi_b^2.
    """
    theta: NDArray[np.float64]
    epsilon: NDArray[np.float64]
    mode_theta: NDArray[np.float64]
    phi_a: NDArray[np.float64]
    phi_b: NDArray[np.float64]
    norms: NDArray[np.float64]

    @property
    def L(self) -> int:
        return self.theta.shape[0]

    def amplitudes_at(self, unit_cell: int, sublattice: Sublattice) -> NDArray[np.float64]:
        """phi_{m, s}(j) for all modes m."""
        phi = self.phi_a if sublattice is Sublattice.A else self.phi_b
        return phi[:, unit_cell - 1]

    def mode_vectors(self) -> NDArray[np.float64]:
        """Orthonormal modes as columns in the site basis a1, b1, a2, ..."""
        v = np.empty((2 * self.L, 2 * self.L))
        v[0::2, :] = self.phi_a.T
        v[1::2, :] = self.phi_b.T
        return v / np.sqrt(self.norms)[None, :]


def theta_condition(J1bar: float, J2: float, L: int, theta: NDArray[np.float64] | float):
    """J1bar sin((L + 1) theta) + J2 sin(L theta); vanishes at allowed theta."""
    return J1bar * np.sin((L + 1) * theta) + J2 * np.sin(L * theta)


def theta_roots(J1bar: float, J2: float, L: int) -> NDArray[np.float64]:
    n = SUBDIVISIONS_PER_CELL * L
    grid = np.pi * np.arange(1, n) / n
    f = theta_condition(J1bar, J2, L, grid)
    roots = list(grid[f == 0])
    for i in np.flatnonzero(f[:-1] * f[1:] < 0):
        roots.append(brentq(lambda t: theta_condition(J1bar, J2, L, t), grid[i], grid[i + 1],
                            xtol=THETA_TOLERANCE))
    return np.sort(np.asarray(roots, dtype=np.float64))


def ssh_obc_eigenbasis(J1bar: float, J2: float, L: int) -> SshObcBasis:
    """Bulk modes phi_a(j) = sin(j theta) + (J2/J1bar) sin((j - 1) theta),
    phi_b(j) = (epsilon/J1bar) sin(j theta). Edge modes have complex theta, so
    a chain in the topological regime yields fewer than L roots."""
    theta = theta_roots(J1bar, J2, L)
    if theta.shape[0] != L:
        raise RootCountMismatch(L, theta.shape[0])

    band = np.sqrt(2 * J1bar * J2 * np.cos(theta) + J1bar**2 + J2**2)
    epsilon = np.concatenate([-band, band])
    mode_theta = np.concatenate([theta, theta])
    order = np.argsort(epsilon, kind="stable")
    epsilon, mode_theta = epsilon[order], mode_theta[order]

    j = np.arange(1, L + 1)
    phi_a = np.sin(np.outer(mode_theta, j)) + (J2 / J1bar) * np.sin(np.outer(mode_theta, j - 1))
    phi_b = (epsilon / J1bar)[:, None] * np.sin(np.outer(mode_theta, j))
    norms = np.sum(phi_a**2 + phi_b**2, axis=1)
    return SshObcBasis(theta, epsilon, mode_theta, phi_a, phi_b, norms)
