from __future__ import annotations

from dataclasses import dataclass, replace
from enum import StrEnum

import numpy as np
from numpy.typing import NDArray

from ..model import BathParams, Boundary
from ..errors.numeric import InvalidParameter, PreconditionViolated


class DisorderKind(StrEnum):
    """Kind of static disorder added to the photonic lattice.

    - `DIAGONAL`: random cavity frequencies on every site
    - `OFF_DIAGONAL`: random corrections to the intracell and intercell hops
    """
    DIAGONAL = "diagonal"
    OFF_DIAGONAL = "off_diagonal"


@dataclass(frozen=True)
class DisorderSpec:
    """Disorder of strength `V`: every draw is uniform on [-V/2, V/2]."""
    kind: DisorderKind
    V: float
    seed: int
    n_realizations: int

    def __post_init__(self):
        if not self.V >= 0:
            raise InvalidParameter("V", self.V, "V >= 0")
        if not 0 <= self.seed < 2**64:
            raise InvalidParameter("seed", self.seed, "0 <= seed < 2^64")
        if self.n_realizations < 1:
            raise InvalidParameter("n_realizations", self.n_realizations, "n_realizations >= 1")

    def with_strength(self, V: float) -> DisorderSpec:
        return replace(self, V=V)


def generator(seed: int, realization_index: int) -> np.random.Generator:
    """Counter-based stream keyed by (seed, realization); independent of the
    order in which realizations are drawn."""
    return np.random.Generator(np.random.Philox(key=np.array([seed, realization_index], dtype=np.uint64)))


def draw_disorder(spec: DisorderSpec, realization_index: int, n: int) -> NDArray[np.float64]:
    if not 0 <= realization_index < spec.n_realizations:
        raise PreconditionViolated(
            f"realization {realization_index} outside 0..{spec.n_realizations - 1}")
    u = generator(spec.seed, realization_index).random(n)
    return spec.V * (u - 0.5)


def sample_disorder(params: BathParams, spec: DisorderSpec, realization_index: int) -> NDArray[np.float64]:
    """Real symmetric perturbation of the 2L photonic sites.

    Both kinds consume 2L draws, so one realization index gives the same
    underlying numbers at every strength `V`.
    """
    L = params.L
    eps = draw_disorder(spec, realization_index, 2 * L)
    if spec.kind is DisorderKind.DIAGONAL:
        return np.diag(eps)

    intracell, intercell = eps[0::2], eps[1::2]
    m = np.zeros((2 * L, 2 * L))
    a = 2 * np.arange(L)
    m[a, a + 1] = m[a + 1, a] = intracell
    m[a[:-1] + 1, a[1:]] = m[a[1:], a[:-1] + 1] = intercell[:-1]
    if params.boundary is Boundary.PBC:
        m[2 * L - 1, 0] = m[0, 2 * L - 1] = intercell[-1]
    return m
