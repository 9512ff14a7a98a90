"""Dressed states of one emitter on the open chain."""

from __future__ import annotations

from typing import override

import numpy as np

from ..model import BathParams, Boundary, Sublattice, build_bath
from ..spectral import obc_spectrum
from ..dressed import (
    DressedStateResult, chiral_extended_analytic, cut_overlap, dressed_profile_sweep,
    dressed_state_numeric, hermitian_hopping, in_gap_pole, on_transition_line,
    ssh_obc_eigenbasis)
from ..errors.numeric import DegenerateGbz, RootCountMismatch
from ..io import OutputDirectory
from ..logging import logger
from .base import ExperimentBase, Table, profile, rows, stack, tagged

log = logger()

GAMMA_TOLERANCE = 1e-12


def state_record(result: DressedStateResult, **tags: object) -> dict[str, object]:
    psi = result.wavefunction
    return tags | {
        "E": result.E,
        "E_d": result.E_d,
        "emitter_weight": psi.emitter_weight,
        "residual": result.residual,
    }


class DressedExperiment(ExperimentBase):
    """The in-gap state from the dense eigenproblem, and from the pole
    equation and the closed form where those apply."""
    @override
    def run(self, out: OutputDirectory):
        cfg = self.cfg
        params = cfg.bath(boundary=Boundary.OBC)
        attach = cfg.emitter()
        states = {"numeric": dressed_state_numeric(params, attach, cfg.delta0, cfg.gamma, cfg.g)}
        if abs(cfg.gamma - cfg.kappa) < GAMMA_TOLERANCE and params.J1 > params.kappa / 2:
            states["poles"] = in_gap_pole(params, attach, cfg.delta0, cfg.g)

        records = [state_record(s, method=m) for m, s in states.items()]
        weights = [tagged(profile(s.wavefunction), method=m) for m, s in states.items()]
        if on_transition_line(params) and abs(attach.delta - params.uniform_loss) < GAMMA_TOLERANCE:
            psi = chiral_extended_analytic(params, attach)
            weights.append(tagged(profile(psi), method="analytic"))

        _ = out.write_table("dressed_energy.csv", rows(records))
        _ = out.write_table("dressed_weights.csv", stack(weights))
        _ = out.write_table("cut_overlap.csv", {
            "cut_overlap": [cut_overlap(params, attach, cfg.delta0, cfg.gamma, cfg.g)]})


def obc_table(params: BathParams) -> Table:
    """Dense OBC bath eigenvalues, next to the analytic SSH energies shifted
    by the uniform loss when the analytic basis exists."""
    spectrum = obc_spectrum(build_bath(params))
    table: Table = {"index": np.arange(len(spectrum)), "E": spectrum.eigenvalues}
    try:
        basis = ssh_obc_eigenbasis(hermitian_hopping(params), params.J2, params.L)
        table["E_analytic"] = basis.epsilon + params.uniform_loss
    except (DegenerateGbz, RootCountMismatch) as e:
        log.info("no analytic bath spectrum: %s", e)
    return table


class Fig3Experiment(ExperimentBase):
    """Bath spectrum and in-gap profiles for both sublattices over `delta0_grid`."""
    @override
    def run(self, out: OutputDirectory):
        cfg = self.cfg
        params = cfg.bath(boundary=Boundary.OBC)
        _ = out.write_table("obc_spectrum.csv", obc_table(params))

        records: list[dict[str, object]] = []
        for sublattice in Sublattice:
            attach = cfg.emitter().replace(sublattice=sublattice)
            weights: list[Table] = []
            for delta0 in cfg.delta0_grid:
                pole = in_gap_pole(params, attach, delta0, cfg.g)
                numeric = dressed_state_numeric(params, attach, delta0, cfg.gamma, cfg.g)
                records.append(state_record(pole, attach=str(sublattice), delta0=delta0)
                               | {"E_d_numeric": numeric.E_d})
                weights.append(tagged(profile(pole.wavefunction), delta0=delta0))
            _ = out.write_table(f"dressed_weights_{sublattice.name}.csv", stack(weights))
        _ = out.write_table("dressed_energies.csv", rows(records))


class Fig4Experiment(ExperimentBase):
    """Profiles of the in-gap state as the emitter decay rate varies."""
    @override
    def run(self, out: OutputDirectory):
        cfg = self.cfg
        params = cfg.bath(boundary=Boundary.OBC)
        attach = cfg.emitter()
        sweep = dressed_profile_sweep(params, attach, cfg.delta0, cfg.gamma_grid, cfg.g)
        _ = out.write_table("dressed_profiles.csv", stack(
            [tagged(profile(s.wavefunction), gamma=gamma) for gamma, s in sweep]))
        _ = out.write_table("dressed_energies.csv", rows([
            state_record(s, gamma=gamma) | {
                "left_weight": s.wavefunction.left_weight(attach.unit_cell),
                "right_weight": s.wavefunction.right_weight(attach.unit_cell),
                "cut_overlap": cut_overlap(params, attach, cfg.delta0, gamma, cfg.g),
            }
            for gamma, s in sweep]))
