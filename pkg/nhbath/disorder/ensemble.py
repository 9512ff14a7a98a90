from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ..model import BathParams, Boundary, EmitterAttachment, build_system
from ..spectral import obc_spectrum
from ..dressed import DressedStateResult, bulk_gap, in_gap_state
from ..errors.numeric import NoInGapState, PreconditionViolated
from ..logging import logger
from .sampling import DisorderSpec, sample_disorder

log = logger()


@dataclass(frozen=True)
class Realization:
    index: int
    state: DressedStateResult | None
    spectrum: NDArray[np.float64]


@dataclass(frozen=True)
class EnsemblePoint:
    """Averages over the realizations at one disorder strength.

    Attributes:
        V: disorder strength.
        energies: in-gap eigenvalue per realization, nan where none was found.
        mean_energy: mean Re E_d over realizations with an in-gap state.
        mean_weights: mean |c_j|^2 of the photon sites, shape (L, 2).
        stderr: standard error of `mean_weights`.
        mean_spectrum: mean of the sorted real parts of the full spectrum.
        spectra: sorted real spectra per realization, kept on request.
    """
    V: float
    energies: NDArray[np.complex128]
    mean_energy: float
    mean_weights: NDArray[np.float64]
    stderr: NDArray[np.float64]
    mean_spectrum: NDArray[np.float64]
    spectra: NDArray[np.float64] | None

    @property
    def found(self) -> int:
        return int(np.count_nonzero(~np.isnan(self.energies)))

    @property
    def skipped(self) -> int:
        return self.energies.shape[0] - self.found

    def left_weight(self, unit_cell: int) -> float:
        """Mean photon weight on the cells left of `unit_cell`."""
        return float(self.mean_weights[: unit_cell - 1].sum())


@dataclass(frozen=True)
class EnsembleResult:
    spec: DisorderSpec
    clean: DressedStateResult
    points: list[EnsemblePoint]


def _realization(
    params: BathParams, attach: EmitterAttachment, spec: DisorderSpec,
    gap: tuple[float, float], index: int
) -> Realization:
    clean = build_system(params, [attach])
    system = clean.with_photon_perturbation(sample_disorder(params, spec, index))
    spectrum = obc_spectrum(system)
    try:
        state = in_gap_state(system, gap, params.kappa, spectrum)
    except NoInGapState:
        log.debug("realization %d at V = %g has no in-gap state, skipped", index, spec.V)
        state = None
    return Realization(index, state, np.sort(spectrum.eigenvalues.real))


def _average(V: float, realizations: list[Realization], keep_spectra: bool, L: int) -> EnsemblePoint:
    energies = np.array([np.nan if r.state is None else r.state.E_d for r in realizations],
                        dtype=np.complex128)
    found = [r.state for r in realizations if r.state is not None]
    spectra = np.stack([r.spectrum for r in realizations])
    if found:
        weights = np.stack([s.wavefunction.weights() for s in found])
        mean_weights = weights.mean(axis=0)
        stderr = (weights.std(axis=0, ddof=1) / np.sqrt(len(found))
                  if len(found) > 1 else np.zeros_like(mean_weights))
        mean_energy = float(np.mean([s.E_d.real for s in found]))
    else:
        mean_weights = stderr = np.full((L, 2), np.nan)
        mean_energy = float("nan")
    return EnsemblePoint(V, energies, mean_energy, mean_weights, stderr,
                         spectra.mean(axis=0), spectra if keep_spectra else None)


def disorder_ensemble(
    params: BathParams, attach: EmitterAttachment, delta: complex, g: float,
    spec: DisorderSpec, V_grid: Sequence[float] | None = None,
    threads: int = 1, keep_spectra: bool = False
) -> EnsembleResult:
    """In-gap dressed state of one emitter averaged over disorder realizations
    for every strength in `V_grid` (default: `spec.V` only).

    The bulk gap of the clean chain is the search window. Realizations run in
    a thread pool; results are reduced in realization order, so the outcome
    does not depend on `threads`.
    """
    if params.boundary is not Boundary.OBC:
        raise PreconditionViolated("disorder ensembles use the open chain")
    attach = attach.replace(delta0=delta.real, gamma=-2 * delta.imag, g=g)
    attach.check(params.L)
    gap = bulk_gap(params)
    clean = in_gap_state(build_system(params, [attach]), gap, params.kappa)

    points = []
    with ThreadPoolExecutor(max_workers=max(threads, 1)) as pool:
        for V in (V_grid if V_grid is not None else [spec.V]):
            at_v = spec.with_strength(V)
            realizations = list(pool.map(
                lambda i: _realization(params, attach, at_v, gap, i),
                range(spec.n_realizations)))
            point = _average(V, realizations, keep_spectra, params.L)
            log.debug("V = %g: %d of %d realizations with an in-gap state",
                      V, point.found, spec.n_realizations)
            points.append(point)
    return EnsembleResult(spec, clean, points)
