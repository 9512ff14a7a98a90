"""Bound states of emitters on the infinite (ring) bath."""

from __future__ import annotations

from typing import override

import numpy as np

from ..boundstates import BoundStateResult, SearchRegion, solve_bound_states
from ..model import Boundary
from ..spectral import band_separation, line_gap
from ..io import OutputDirectory
from .base import ExperimentBase, Table, profile, rows, stack, tagged
from .bath import band_table

# half width of the window searched around each detuning of a sweep
SWEEP_WINDOW = 1.0
SWEEP_SEEDS = 12


def state_record(index: int, result: BoundStateResult) -> dict[str, object]:
    return {
        "state": index,
        "E_b": result.E_b,
        "classification": str(result.classification),
        "emitter_weight": result.wavefunction.emitter_weight,
        "residual": result.residual,
    }


class BoundExperiment(ExperimentBase):
    @override
    def run(self, out: OutputDirectory):
        cfg = self.cfg
        window = cfg.search
        results = solve_bound_states(
            cfg.bath(boundary=Boundary.PBC), cfg.emitter(), cfg.delta,
            SearchRegion(window.re_min, window.re_max, window.im_min, window.im_max),
            L_grid=cfg.L_grid, threads=cfg.threads)
        _ = out.write_table("bound_states.csv", rows(
            [state_record(i, r) for i, r in enumerate(results)]))
        _ = out.write_table("bound_profiles.csv", stack(
            [tagged(profile(r.wavefunction), state=i) for i, r in enumerate(results)]))


class Fig2Experiment(ExperimentBase):
    """PBC bands of each panel together with the bound-state energies for
    every detuning on `delta_grid`."""
    @override
    def run(self, out: OutputDirectory):
        cfg = self.cfg
        bands: list[Table] = []
        panels: list[dict[str, object]] = []
        energies: list[dict[str, object]] = []
        for J1 in cfg.J1_grid:
            params = cfg.bath(J1=J1, boundary=Boundary.PBC)
            bands.append(tagged(band_table(params, cfg.nk), J1=J1))
            panels.append({
                "J1": J1, "line_gap": line_gap(params, cfg.nk),
                "band_separation": band_separation(params, cfg.nk)})
            for re, im in cfg.delta_grid:
                delta = complex(re, im)
                results = solve_bound_states(
                    params, cfg.emitter(), delta, SearchRegion.around(delta, SWEEP_WINDOW),
                    L_grid=cfg.L_grid, n_seeds=SWEEP_SEEDS, threads=cfg.threads)
                energies.extend({"J1": J1, "delta": delta} | state_record(i, r)
                                for i, r in enumerate(results))
        _ = out.write_table("pbc_bands.csv", stack(bands))
        _ = out.write_table("panels.csv", rows(panels))
        _ = out.write_table("bound_energies.csv", rows(energies))
