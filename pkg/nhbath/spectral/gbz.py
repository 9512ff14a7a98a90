"""Generalized Brillouin zone of the two-band bath and the non-Bloch winding
number evaluated on it."""

from __future__ import annotations

from dataclasses import dataclass
import cmath
import math

import numpy as np
from numpy.typing import NDArray

from ..model import BathParams
from ..errors.numeric import AtTransition, DegenerateGbz
from .winding import START_GRID, converged_winding

TRANSITION_MARGIN = 1e-6


@dataclass(frozen=True)
class GbzData:
    """The two solutions of the GBZ quadratic at one energy, the GBZ radius
    and the non-Bloch winding number of the bath."""
    beta1: complex
    beta2: complex
    radius: float
    winding: int


def _degenerate(params: BathParams) -> bool:
    scale = 1e-12 * (1 + abs(params.J1))
    return params.kappa > 0 and (abs(params.j1_minus) < scale or abs(params.j1_plus) < scale)


def gbz_radius(params: BathParams) -> float:
    """r = sqrt(|(J1 + kappa/2) / (J1 - kappa/2)|); the unit circle without loss."""
    if params.kappa == 0:
        return 1.0
    if _degenerate(params):
        raise DegenerateGbz(params.J1, params.kappa)
    return math.sqrt(abs(params.nonreciprocity))


def gbz_betas(params: BathParams, E: complex) -> tuple[complex, complex]:
    """Roots beta of det(H(beta) - E) = 0, sorted by modulus then argument.
    `E` is a bath energy, the uniform loss -i kappa/2 included."""
    if params.J2 == 0 or params.j1_minus == 0:
        raise DegenerateGbz(params.J1, params.kappa)
    e = E - params.uniform_loss
    x = e * e + params.kappa**2 / 4 - params.J1**2 - params.J2**2
    root = cmath.sqrt(x * x - 4 * params.J2**2 * params.j1_minus * params.j1_plus)
    denominator = 2 * params.J2 * params.j1_minus
    betas = sorted([(x + root) / denominator, (x - root) / denominator],
                   key=lambda b: (abs(b), cmath.phase(b)))
    return betas[0], betas[1]


def q_element(params: BathParams, beta: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """Off-diagonal q(beta) of the generalized Q-matrix of the chiral non-Bloch
    Hamiltonian, principal branch."""
    upper = params.j1_minus + params.J2 / beta
    lower = params.j1_plus + params.J2 * beta
    return np.sqrt(upper / lower)


def transition_points(params: BathParams) -> tuple[float, float]:
    t = math.sqrt(params.J2**2 + params.kappa**2 / 4)
    return (-t, t)


def phase_boundaries(params: BathParams) -> list[float]:
    """Positive |J1| values where the OBC gap closes. Besides the transition
    points there is an inner boundary sqrt(kappa^2/4 - J2^2) when J2 < kappa/2."""
    boundaries = [transition_points(params)[1]]
    inner = params.kappa**2 / 4 - params.J2**2
    if inner > 0:
        boundaries.append(math.sqrt(inner))
    return boundaries


def topological_phase(params: BathParams) -> bool:
    """Closed-form nontriviality, J2^2 > |J1^2 - kappa^2/4|."""
    return params.J2**2 > abs(params.J1**2 - params.kappa**2 / 4)


def non_bloch_winding(params: BathParams, n: int = START_GRID) -> int:
    """W = (i / 2 pi) times the contour integral of dq/q around |beta| = r.
    With q = sqrt(A/B) this is minus half the winding of A/B."""
    for boundary in phase_boundaries(params):
        if abs(abs(params.J1) - boundary) < TRANSITION_MARGIN:
            raise AtTransition(params.J1, boundary)
    r = gbz_radius(params)

    def loop(m: int) -> NDArray[np.complex128]:
        beta = r * np.exp(2j * np.pi * np.arange(m + 1) / m)
        return (params.j1_minus + params.J2 / beta) / (params.j1_plus + params.J2 * beta)

    twice = converged_winding(loop, n, "non-Bloch winding")
    if twice % 2:
        raise AtTransition(params.J1, transition_points(params)[1])
    return -twice // 2


def gbz_data(params: BathParams, E: complex) -> GbzData:
    beta1, beta2 = gbz_betas(params, E)
    return GbzData(beta1, beta2, gbz_radius(params), non_bloch_winding(params))
