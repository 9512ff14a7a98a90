"""Two emitters on the open chain, each initially excited in turn."""

from __future__ import annotations

from typing import override

import numpy as np
from numpy.typing import NDArray

from ..model import BathParams, Boundary, EmitterAttachment, Sublattice, Wavefunction, build_system
from ..dynamics import emitter_amplitudes_resolvent, evolve, exchange_asymmetry
from ..errors.internal import InternalError
from ..errors.numeric import PreconditionViolated
from ..io import OutputDirectory
from ..logging import logger
from .base import ExperimentBase, Table, stack, tagged, rows

log = logger()

GAMMA_TOLERANCE = 1e-12
N_SNAPSHOTS = 5


def uses_resolvent(params: BathParams, gamma: float) -> bool:
    return abs(gamma - params.kappa) < GAMMA_TOLERANCE and params.J1 > params.kappa / 2


def trajectories(
    params: BathParams, pair: tuple[EmitterAttachment, EmitterAttachment],
    times: NDArray[np.float64], resolvent: bool
) -> tuple[Table, Table]:
    """Amplitude table over both initial conditions and photon snapshots."""
    system = build_system(params, list(pair))
    snapshots = np.linspace(0, times.shape[0] - 1, N_SNAPSHOTS).astype(int)
    amplitudes: list[Table] = []
    photons: list[Table] = []
    for initial in range(2):
        psi0 = Wavefunction.emitter_excited(2, params.L, initial)
        traj = evolve(system, psi0, times, keep_photons=True)
        table: Table = {
            "t": times,
            "c1": traj.emitter_amplitudes[0], "c2": traj.emitter_amplitudes[1],
            "C1": traj.populations()[0], "C2": traj.populations()[1],
            "p_t": traj.p_t,
        }
        if resolvent:
            c = emitter_amplitudes_resolvent(params, pair[0], pair[1], psi0, times)
            table |= {"c1_resolvent": c[0], "c2_resolvent": c[1]}
            log.debug("resolvent and propagation differ by %.2e",
                      float(np.max(np.abs(c - traj.emitter_amplitudes))))
        amplitudes.append(tagged(table, initial=initial + 1))

        if traj.photon_amplitudes is None:
            raise InternalError("trajectory lost its photon amplitudes", [initial])
        for n in snapshots:
            weights = np.abs(traj.photon_amplitudes[n]) ** 2
            photons.append({
                "initial": np.full(2 * params.L, initial + 1),
                "t": np.full(2 * params.L, times[n]),
                "j": np.repeat(np.arange(1, params.L + 1), 2),
                "sublattice": np.tile(["a", "b"], params.L),
                "weight": weights.reshape(-1),
            })
    return stack(amplitudes), stack(photons)


class DynamicsExperiment(ExperimentBase):
    @override
    def run(self, out: OutputDirectory):
        cfg = self.cfg
        params = cfg.bath(boundary=Boundary.OBC)
        times = np.linspace(0.0, cfg.t_max, cfg.n_times)
        amplitudes, photons = trajectories(
            params, (cfg.emitter(), cfg.second_emitter()), times, uses_resolvent(params, cfg.gamma))
        _ = out.write_table("trajectory.csv", amplitudes)
        _ = out.write_table("photon_snapshot.csv", photons)


class Fig5Experiment(ExperimentBase):
    """Both emitters on `a`, and the second one moved to `b`, each by direct
    propagation and, where it applies, by the resolvent residue sum."""
    @override
    def run(self, out: OutputDirectory):
        cfg = self.cfg
        params = cfg.bath(boundary=Boundary.OBC)
        times = np.linspace(0.0, cfg.t_max, cfg.n_times)
        resolvent = uses_resolvent(params, cfg.gamma)
        first = cfg.emitter()

        amplitudes: list[Table] = []
        photons: list[Table] = []
        summary: list[dict[str, object]] = []
        for sublattice in Sublattice:
            pair = (first, cfg.second_emitter().replace(sublattice=sublattice))
            configuration = f"{first.sublattice}{sublattice}"
            table, snapshot = trajectories(params, pair, times, resolvent)
            amplitudes.append(tagged(table, configuration=configuration))
            photons.append(tagged(snapshot, configuration=configuration))

            initial = np.asarray(table["initial"])
            forward = float(np.max(np.asarray(table["C2"])[initial == 1]))
            backward = float(np.max(np.asarray(table["C1"])[initial == 2]))
            try:
                F = exchange_asymmetry(params, *pair)
            except PreconditionViolated as e:
                log.warning("no asymmetry factor for `%s`: %s", configuration, e)
                F = float("nan")
            summary.append({
                "configuration": configuration,
                "F": F,
                "max_C2_from_1": forward,
                "max_C1_from_2": backward,
            })
        _ = out.write_table("dynamics.csv", stack(amplitudes))
        _ = out.write_table("photon_snapshot.csv", stack(photons))
        _ = out.write_table("asymmetry.csv", rows(summary))
