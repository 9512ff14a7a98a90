from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..model import BathParams, Boundary, EmitterAttachment, Sublattice
from ..disorder import DisorderKind
from .config_update import ConfigUpdate, SearchWindow
from .experiment import Experiment


@dataclass(frozen=True)
class ExperimentConfig:
    """Fully resolved experiment config. Energies are in units of J2.

    Attributes:
        experiment: what to compute.
        J1, J2, kappa, L, boundary: the bath.
        attach, unit_cell: first emitter; `unit_cell` defaults to the middle cell.
        attach2, unit_cell2: second emitter, two-emitter experiments only.
        g, delta0, gamma: coupling, detuning and decay rate of the emitters.
        nk: momentum samples for PBC bands.
        L_grid: ring size for self-energy sums.
        J1_grid, kappa_grid, delta_grid, delta0_grid, gamma_grid: sweeps.
        search: window of the bound-state solver.
        t_max, n_times: time grid of the dynamics.
        disorder_kind, V_grid, n_realizations, seed: disorder ensembles.
        output: output directory, `nhbath-<experiment>` when unset.
        threads: worker threads.
    """
    experiment: Experiment | None = None

    J1: float = 1.6
    J2: float = 1.0
    kappa: float = 1.2
    L: int = 40
    boundary: Boundary = Boundary.OBC

    attach: Sublattice = Sublattice.A
    unit_cell: int | None = None
    attach2: Sublattice = Sublattice.A
    unit_cell2: int | None = None
    g: float = 0.5
    delta0: float = 0.0
    gamma: float = 0.0

    nk: int = 512
    L_grid: int = 4096
    J1_grid: tuple[float, ...] = ()
    kappa_grid: tuple[float, ...] = ()
    delta_grid: tuple[tuple[float, float], ...] = ()
    delta0_grid: tuple[float, ...] = ()
    gamma_grid: tuple[float, ...] = ()
    search: SearchWindow = field(default_factory=SearchWindow)

    t_max: float = 40.0
    n_times: int = 401

    disorder_kind: tuple[DisorderKind, ...] = (DisorderKind.DIAGONAL,)
    V_grid: tuple[float, ...] = (0.0,)
    n_realizations: int = 100
    seed: int = 0

    output: str | None = None
    threads: int = 1

    def bath(self, **kwargs: object) -> BathParams:
        """Bath parameters; keyword arguments override single fields."""
        args: dict[str, object] = dict(
            J1=self.J1, J2=self.J2, kappa=self.kappa, L=self.L, boundary=self.boundary)
        return BathParams(**(args | kwargs))  # pyright: ignore[reportArgumentType]

    @property
    def delta(self) -> complex:
        return complex(self.delta0, -self.gamma / 2)

    def emitter(self) -> EmitterAttachment:
        unit_cell = self.unit_cell if self.unit_cell is not None else (self.L + 1) // 2
        return EmitterAttachment(unit_cell, self.attach, self.g, self.delta0, self.gamma)

    def second_emitter(self) -> EmitterAttachment:
        unit_cell = self.unit_cell2 if self.unit_cell2 is not None else self.L
        return EmitterAttachment(unit_cell, self.attach2, self.g, self.delta0, self.gamma)

    @property
    def output_dir(self) -> str:
        return self.output if self.output is not None else f"nhbath-{self.experiment}"

    def __or__(self, update: ConfigUpdate | None) -> ExperimentConfig:
        if update is None:
            return self
        changes = {
            name: getattr(update, name) for name in update.__struct_fields__
            if getattr(update, name) is not None
        }
        return replace(self, **changes)
