"""Bath-only experiments: spectra and the non-Bloch phase diagram."""

from __future__ import annotations

from typing import override

import numpy as np

from ..model import BathParams, Boundary, build_bath
from ..spectral import (
    band_separation, gbz_radius, line_gap, non_bloch_winding, obc_spectrum, pbc_bands,
    topological_phase)
from ..errors.numeric import AtTransition, DegenerateGbz
from ..io import OutputDirectory
from ..logging import logger
from .base import ExperimentBase, Table, rows

log = logger()


def band_table(params: BathParams, nk: int) -> Table:
    ks, energies = pbc_bands(params, nk)
    return {
        "k": np.repeat(ks, 2),
        "band": np.tile([0, 1], ks.shape[0]),
        "E": energies.reshape(-1),
    }


def winding_record(params: BathParams) -> dict[str, object]:
    """Winding, GBZ radius and closed-form phase; `W` is left empty where it
    is undefined."""
    record: dict[str, object] = {
        "J1": params.J1, "kappa": params.kappa,
        "topological": topological_phase(params),
        "radius": float("nan"), "W": None, "status": "ok",
    }
    try:
        record["radius"] = gbz_radius(params)
        record["W"] = non_bloch_winding(params)
    except AtTransition:
        record["status"] = "transition"
    except DegenerateGbz:
        record["status"] = "degenerate"
    return record


class SpectrumExperiment(ExperimentBase):
    @override
    def run(self, out: OutputDirectory):
        params = self.cfg.bath()
        _ = out.write_table("pbc_bands.csv", band_table(params.with_boundary(Boundary.PBC), self.cfg.nk))

        spectrum = obc_spectrum(build_bath(params.with_boundary(Boundary.OBC)))
        _ = out.write_table("obc_spectrum.csv", {
            "index": np.arange(len(spectrum)), "E": spectrum.eigenvalues})

        record = winding_record(params) | {
            "line_gap": line_gap(params, self.cfg.nk),
            "band_separation": band_separation(params, self.cfg.nk),
        }
        _ = out.write_table("invariants.csv", rows([record]))


class GbzExperiment(ExperimentBase):
    @override
    def run(self, out: OutputDirectory):
        records = [
            winding_record(self.cfg.bath(J1=J1, kappa=kappa))
            for J1 in self.cfg.J1_grid for kappa in self.cfg.kappa_grid
        ]
        undefined = sum(r["status"] != "ok" for r in records)
        if undefined:
            log.info("winding undefined at %d of %d grid points", undefined, len(records))
        _ = out.write_table("phase_diagram.csv", rows(records))
