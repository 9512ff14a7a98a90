"""Physics sanity checks on a resolved config. These report, they never raise."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from ..model import Boundary
from ..errors.numeric import NumericError
from .config_data import ExperimentConfig
from .experiment import Experiment

TRANSITION_EXACT = 1e-12
TRANSITION_NEAR = 1e-3

# experiments that look at the periodic bath, where the transition line is an exceptional point
PERIODIC = {Experiment.SPECTRUM, Experiment.GBZ, Experiment.BOUND, Experiment.FIG2}
# experiments that rely on the similarity transform
ANALYTIC = {Experiment.DRESSED, Experiment.DYNAMICS, Experiment.FIG3, Experiment.FIG5}
TWO_EMITTERS = {Experiment.DYNAMICS, Experiment.FIG5}
RESOLVENT = {Experiment.FIG5}
DISORDER = {Experiment.DISORDER, Experiment.FIGS3}


class Severity(StrEnum):
    """How serious a diagnostic is; only `ERROR` stops a run."""
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    key: str
    message: str


def _physics(cfg: ExperimentConfig) -> list[Diagnostic]:
    try:
        params = cfg.bath()
        cfg.emitter().check(params.L)
        if cfg.experiment in TWO_EMITTERS:
            second = cfg.second_emitter()
            second.check(params.L)
            if second.site_index(params.L) == cfg.emitter().site_index(params.L):
                return [Diagnostic(Severity.ERROR, "unit_cell2", "both emitters on the same site")]
    except NumericError as e:
        return [Diagnostic(Severity.ERROR, e.name, str(e))]
    return []


def _transition(cfg: ExperimentConfig) -> list[Diagnostic]:
    if cfg.experiment not in PERIODIC and cfg.boundary is not Boundary.PBC:
        return []
    J1s = cfg.J1_grid or (cfg.J1,)
    kappas = cfg.kappa_grid if cfg.experiment is Experiment.GBZ and cfg.kappa_grid else (cfg.kappa,)
    distance = min(
        min(abs(cfg.J2 - abs(J1 - kappa / 2)), abs(cfg.J2 - (J1 + kappa / 2)))
        for J1 in J1s for kappa in kappas)
    if distance < TRANSITION_EXACT:
        return [Diagnostic(Severity.INFO, "J1", "on transition line (exceptional point in PBC bath)")]
    if distance < TRANSITION_NEAR:
        return [Diagnostic(Severity.WARNING, "J1", f"within {distance:.1e} of the transition line")]
    return []


def _grids(cfg: ExperimentConfig) -> list[Diagnostic]:
    if cfg.experiment is None:
        return []
    required: dict[Experiment, list[str]] = {
        Experiment.GBZ: ["J1_grid", "kappa_grid"],
        Experiment.FIG2: ["J1_grid", "delta_grid"],
        Experiment.FIG3: ["delta0_grid"],
        Experiment.FIG4: ["gamma_grid"],
        Experiment.DISORDER: ["V_grid", "disorder_kind"],
        Experiment.FIGS3: ["V_grid", "disorder_kind"],
    }
    return [
        Diagnostic(Severity.ERROR, key, f"`{key}` must not be empty")
        for key in required.get(cfg.experiment, []) if not getattr(cfg, key)
    ]


def _numerics(cfg: ExperimentConfig) -> list[Diagnostic]:
    result = []
    if cfg.nk < 4:
        result.append(Diagnostic(Severity.ERROR, "nk", "need at least 4 momenta"))
    if cfg.L_grid < 2:
        result.append(Diagnostic(Severity.ERROR, "L_grid", "need at least 2 ring cells"))
    if cfg.threads < 1:
        result.append(Diagnostic(Severity.ERROR, "threads", "need at least one thread"))
    if cfg.experiment in TWO_EMITTERS:
        if cfg.n_times < 2:
            result.append(Diagnostic(Severity.ERROR, "n_times", "need at least two time samples"))
        if not cfg.t_max > 0:
            result.append(Diagnostic(Severity.ERROR, "t_max", "must be positive"))
    if cfg.experiment in DISORDER:
        if cfg.n_realizations < 1:
            result.append(Diagnostic(Severity.ERROR, "n_realizations", "need at least one realization"))
        if any(not V >= 0 for V in cfg.V_grid):
            result.append(Diagnostic(Severity.ERROR, "V_grid", "disorder strengths must be >= 0"))
        if not 0 <= cfg.seed < 2**64:
            result.append(Diagnostic(Severity.ERROR, "seed", "must fit in 64 unsigned bits"))
    return result


def validate(cfg: ExperimentConfig) -> list[Diagnostic]:
    diagnostics = _physics(cfg) + _grids(cfg) + _numerics(cfg) + _transition(cfg)
    if cfg.experiment in ANALYTIC and not cfg.J1 > cfg.kappa / 2:
        diagnostics.append(Diagnostic(
            Severity.WARNING, "J1", "analytic path unavailable: J1 ≤ κ/2"))
    if cfg.experiment in RESOLVENT and abs(cfg.gamma - cfg.kappa) > 1e-12:
        diagnostics.append(Diagnostic(
            Severity.WARNING, "gamma", "resolvent cross-check needs gamma = kappa, skipped"))
    return diagnostics
