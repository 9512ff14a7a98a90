"""Roots of det[E - Delta - Sigma(E)] = 0 by grid-seeded Newton iteration."""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.typing import NDArray

from ..model import BathParams, EmitterAttachment, Wavefunction
from ..spectral import line_gap, pbc_bands, point_gap_winding, spectrum_distance
from ..spectral.bloch import ON_SPECTRUM
from ..errors.numeric import NewtonDiverged, NoConvergence, OnSpectrum, PreconditionViolated
from ..logging import logger
from .self_energy import DEFAULT_GRID, self_energy_matrix, self_energy_on_grid
from .reconstruction import bound_state_wavefunction, ring_residual

log = logger()

NEWTON_ITERATIONS = 60
NEWTON_TOLERANCE = 1e-10
DEDUP_TOLERANCE = 1e-8
RESIDUAL_TOLERANCE = 1e-8


class BoundStateKind(StrEnum):
    """Where a bound-state energy sits relative to the PBC bands.

    - `LINE_GAP_CHIRAL`: between the two loops of a line-gapped spectrum
    - `POINT_GAP_HIDDEN`: encircled by the spectrum, nonzero point-gap winding
    - `OUT_OF_BAND`: anywhere else
    """
    LINE_GAP_CHIRAL = "line-gap-chiral"
    POINT_GAP_HIDDEN = "point-gap-hidden"
    OUT_OF_BAND = "out-of-band"


@dataclass(frozen=True)
class SearchRegion:
    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def seeds(self, n: int) -> NDArray[np.complex128]:
        """Cell centres of an n x n grid, shape (n, n); rows share Im E."""
        re = self.re_min + (np.arange(n) + 0.5) * (self.re_max - self.re_min) / n
        im = self.im_min + (np.arange(n) + 0.5) * (self.im_max - self.im_min) / n
        return re[None, :] + 1j * im[:, None]

    def contains(self, z: NDArray[np.complex128], margin: float = 0.0) -> NDArray[np.bool_]:
        return (z.real >= self.re_min - margin) & (z.real <= self.re_max + margin) \
            & (z.imag >= self.im_min - margin) & (z.imag <= self.im_max + margin)

    @classmethod
    def around(cls, center: complex, half_width: float) -> SearchRegion:
        return cls(center.real - half_width, center.real + half_width,
                   center.imag - half_width, center.imag + half_width)


@dataclass(frozen=True)
class BoundStateResult:
    E_b: complex
    wavefunction: Wavefunction
    residual: float
    classification: BoundStateKind


def _condition(
    params: BathParams, attachments: Sequence[EmitterAttachment], z: NDArray[np.complex128], n: int
) -> NDArray[np.complex128]:
    sigma = self_energy_on_grid(params, attachments, z, n)
    m = -sigma
    for p, e in enumerate(attachments):
        m[..., p, p] += z - e.delta
    return np.linalg.det(m)


def _newton(
    params: BathParams, attachments: Sequence[EmitterAttachment], seeds: NDArray[np.complex128],
    search: SearchRegion, n: int
) -> NDArray[np.complex128]:
    """Newton iteration from a row of seeds; seeds that leave the region or
    blow up come back as nan."""
    z = seeds.copy()
    with np.errstate(all="ignore"):
        for _ in range(NEWTON_ITERATIONS):
            f = _condition(params, attachments, z, n)
            h = 1e-6 * (1 + np.abs(z))
            df = (_condition(params, attachments, z + h, n)
                  - _condition(params, attachments, z - h, n)) / (2 * h)
            z = z - f / df
            z = np.where(np.isfinite(z) & search.contains(z, margin=1.0), z, np.nan)
        f = _condition(params, attachments, z, n)
    ok = np.isfinite(z) & (np.abs(f) < NEWTON_TOLERANCE) & search.contains(z)
    return np.where(ok, z, np.nan)


def _deduplicate(roots: NDArray[np.complex128]) -> list[complex]:
    unique: list[complex] = []
    for z in sorted(roots[np.isfinite(roots)].tolist(), key=lambda c: (c.real, c.imag)):
        if all(abs(z - u) > DEDUP_TOLERANCE for u in unique):
            unique.append(z)
    return unique


def classify(params: BathParams, E: complex) -> BoundStateKind:
    if point_gap_winding(params, E) != 0:
        return BoundStateKind.POINT_GAP_HIDDEN
    if line_gap(params) > 0:
        _, energies = pbc_bands(params, 512)
        if np.max(energies[:, 0].real) < E.real < np.min(energies[:, 1].real):
            return BoundStateKind.LINE_GAP_CHIRAL
    return BoundStateKind.OUT_OF_BAND


def _emitter_amplitudes(
    params: BathParams, attachments: Sequence[EmitterAttachment], E: complex, L_grid: int
) -> NDArray[np.complex128]:
    if len(attachments) == 1:
        return np.ones(1, dtype=np.complex128)
    m = -self_energy_matrix(params, attachments, E, L_grid)
    for p, e in enumerate(attachments):
        m[p, p] += E - e.delta
    _, _, vh = np.linalg.svd(m)
    return vh[-1].conj()


def _is_root(
    params: BathParams, attachments: Sequence[EmitterAttachment], z: complex, L_grid: int
) -> bool:
    """Check the condition with the converged self-energy; roots that only
    exist on the finite momentum grid sit next to the bands and fail here."""
    m = -self_energy_matrix(params, attachments, z, L_grid)
    for p, e in enumerate(attachments):
        m[p, p] += z - e.delta
    return bool(abs(np.linalg.det(m)) < 10 * NEWTON_TOLERANCE)


def _package(
    params: BathParams, attachments: Sequence[EmitterAttachment], E: complex, L_grid: int
) -> BoundStateResult:
    c_e = _emitter_amplitudes(params, attachments, E, L_grid)
    L = max(params.L, max(e.unit_cell for e in attachments))
    while True:
        psi = bound_state_wavefunction(params, attachments, E, L, c_e)
        residual = ring_residual(params, attachments, E, psi)
        if residual < RESIDUAL_TOLERANCE or L >= L_grid:
            break
        log.debug("bound state at %s: residual %.2e on %d cells, doubling", E, residual, L)
        L *= 2
    if residual >= RESIDUAL_TOLERANCE:
        log.warning("bound state at `%s` keeps residual %.2e on %d cells", E, residual, L)
    return BoundStateResult(E, psi, residual, classify(params, E))


def solve_bound_states(
    params: BathParams,
    attach: EmitterAttachment | Sequence[EmitterAttachment],
    delta: complex | None,
    search: SearchRegion,
    L_grid: int = DEFAULT_GRID,
    n_seeds: int = 40,
    threads: int = 1,
) -> list[BoundStateResult]:
    """All bound states with energy inside `search`, for one emitter or a pair.
    `delta` overrides the detuning of a single emitter."""
    if isinstance(attach, EmitterAttachment):
        if delta is not None:
            attach = attach.replace(delta0=delta.real, gamma=-2 * delta.imag)
        attachments = [attach]
    else:
        attachments = list(attach)
    if not 1 <= len(attachments) <= 2:
        raise PreconditionViolated(
            f"the bound-state condition takes one or two emitters, got {len(attachments)}")
    for e in attachments:
        e.check(params.L)

    seeds = search.seeds(n_seeds)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        rows = list(pool.map(lambda row: _newton(params, attachments, row, search, L_grid), seeds))
    roots = np.concatenate(rows)
    diverged = ~np.isfinite(roots)
    for seed in seeds.reshape(-1)[diverged]:
        log.debug("skipped: %s", NewtonDiverged(complex(seed)))
    if np.any(diverged):
        log.debug("%d of %d Newton seeds diverged or left the search region",
                  int(np.sum(diverged)), roots.size)

    results: list[BoundStateResult] = []
    for z in _deduplicate(roots):
        distance = spectrum_distance(params, z, L_grid)
        if distance < ON_SPECTRUM:
            log.debug("discarding root %s on the PBC spectrum", z)
            continue
        try:
            if not _is_root(params, attachments, z, L_grid):
                log.debug("discarding root %s of the finite momentum grid", z)
                continue
            results.append(_package(params, attachments, z, L_grid))
        except (OnSpectrum, NoConvergence) as e:
            log.debug("discarding root %s: %s", z, e)
    if not results:
        log.info("no bound state in the search region")
    return results
