"""Disorder-averaged in-gap dressed states."""

from __future__ import annotations

from typing import override

import numpy as np

from ..model import Boundary
from ..disorder import DisorderSpec, disorder_ensemble
from ..io import OutputDirectory
from ..logging import logger
from .base import ExperimentBase, Table, rows, stack, tagged

log = logger()


class DisorderExperiment(ExperimentBase):
    """One ensemble per disorder kind, every strength on `V_grid`."""
    @override
    def run(self, out: OutputDirectory):
        cfg = self.cfg
        params = cfg.bath(boundary=Boundary.OBC)
        attach = cfg.emitter()
        L = params.L

        weights: list[Table] = []
        energies: list[Table] = []
        spectra: list[Table] = []
        summary: list[dict[str, object]] = []
        for kind in cfg.disorder_kind:
            spec = DisorderSpec(kind, 0.0, cfg.seed, cfg.n_realizations)
            result = disorder_ensemble(params, attach, cfg.delta, cfg.g, spec, cfg.V_grid, cfg.threads)
            for point in result.points:
                if point.skipped:
                    log.info("`%s` disorder at V = %g: %d realizations without in-gap state",
                             kind, point.V, point.skipped)
                tags = {"kind": str(kind), "V": point.V}
                weights.append(tagged({
                    "j": np.repeat(np.arange(1, L + 1), 2),
                    "sublattice": np.tile(["a", "b"], L),
                    "mean_weight": point.mean_weights.reshape(-1),
                    "stderr": point.stderr.reshape(-1),
                }, **tags))
                energies.append(tagged({
                    "realization": np.arange(point.energies.shape[0]),
                    "E": point.energies,
                }, **tags))
                spectra.append(tagged({
                    "index": np.arange(point.mean_spectrum.shape[0]),
                    "mean_re_E": point.mean_spectrum,
                }, **tags))
                summary.append(tags | {
                    "found": point.found, "skipped": point.skipped,
                    "mean_re_E": point.mean_energy,
                    "left_weight": point.left_weight(attach.unit_cell),
                    "clean_left_weight": result.clean.wavefunction.left_weight(attach.unit_cell),
                })
        _ = out.write_table("ensemble_weights.csv", stack(weights))
        _ = out.write_table("ensemble_spectrum.csv", stack(energies))
        _ = out.write_table("mean_spectrum.csv", stack(spectra))
        _ = out.write_table("ensemble_summary.csv", rows(summary))
