from __future__ import annotations

from collections.abc import Callable

import numpy as np
from numpy.typing import NDArray

from ..errors.numeric import NoConvergence
from ..logging import logger

log = logger()

START_GRID = 2048
MAX_DOUBLINGS = 8
RESIDUAL = 1e-6


def phase_winding(values: NDArray[np.complex128]) -> float:
    """Accumulated phase of a closed loop over 2 pi. The first sample must be
    repeated at the end."""
    phase = np.unwrap(np.angle(values))
    return float((phase[-1] - phase[0]) / (2 * np.pi))


def converged_winding(
    loop: Callable[[int], NDArray[np.complex128]],
    n: int = START_GRID,
    what: str = "winding number",
) -> int:
    """Evaluate `loop(n)` on successively doubled grids until two successive
    windings agree, then round to an integer."""
    previous = phase_winding(loop(n))
    for _ in range(MAX_DOUBLINGS):
        n *= 2
        current = phase_winding(loop(n))
        if abs(current - previous) < RESIDUAL:
            break
        log.debug("%s: grid %d gives %.8f, previous %.8f", what, n, current, previous)
        previous = current
    else:
        raise NoConvergence(what, n)

    if abs(current - round(current)) > RESIDUAL:
        raise NoConvergence(what, n)
    return int(round(current))
