from msgspec import Struct

from ..model import Boundary, Sublattice
from ..disorder import DisorderKind
from .experiment import Experiment


class SearchWindow(Struct, forbid_unknown_fields=True):
    """Rectangle of the complex plane seeded by the bound-state solver."""
    re_min: float = -4.0
    re_max: float = 4.0
    im_min: float = -2.0
    im_max: float = 0.0


class ConfigUpdate(Struct, forbid_unknown_fields=True):
    """An update to an experiment config. Every key is optional; keys that
    are given override what is already there.

    Complex detunings in `delta_grid` are written as `[re, im]` pairs.
    """
    experiment: Experiment | None = None

    J1: float | None = None
    J2: float | None = None
    kappa: float | None = None
    L: int | None = None
    boundary: Boundary | None = None

    attach: Sublattice | None = None
    unit_cell: int | None = None
    attach2: Sublattice | None = None
    unit_cell2: int | None = None
    g: float | None = None
    delta0: float | None = None
    gamma: float | None = None

    nk: int | None = None
    L_grid: int | None = None
    J1_grid: tuple[float, ...] | None = None
    kappa_grid: tuple[float, ...] | None = None
    delta_grid: tuple[tuple[float, float], ...] | None = None
    delta0_grid: tuple[float, ...] | None = None
    gamma_grid: tuple[float, ...] | None = None
    search: SearchWindow | None = None

    t_max: float | None = None
    n_times: int | None = None

    disorder_kind: tuple[DisorderKind, ...] | None = None
    V_grid: tuple[float, ...] | None = None
    n_realizations: int | None = None
    seed: int | None = None

    output: str | None = None
    threads: int | None = None


prefab_config: dict[Experiment, ConfigUpdate] = {
    Experiment.FIG2: ConfigUpdate(
        J1_grid=(2.5, 0.6), kappa=1.2, g=0.5, boundary=Boundary.PBC,
        delta_grid=((0.0, -0.6), (5.0, -0.6), (0.2, -0.4), (-0.2, -0.8))),
    Experiment.FIG3: ConfigUpdate(
        J1=1.6, kappa=1.2, gamma=1.2, g=0.5, L=20, unit_cell=10,
        delta0_grid=(0.0, 0.2, 3.0)),
    Experiment.FIG4: ConfigUpdate(
        J1=1.6, kappa=1.2, g=0.5, L=40, unit_cell=20, delta0=0.0,
        gamma_grid=(0.4, 0.8, 1.0, 1.2)),
    Experiment.FIG5: ConfigUpdate(
        J1=1.2, kappa=0.4, gamma=0.4, g=0.4, L=100, unit_cell=45, unit_cell2=55,
        t_max=40.0, n_times=401),
    Experiment.FIGS3: ConfigUpdate(
        J1=1.6, kappa=1.2, gamma=1.2, g=0.5, L=40, unit_cell=20, delta0=0.0,
        n_realizations=1000, V_grid=tuple(0.25 * i for i in range(9)),
        disorder_kind=(DisorderKind.DIAGONAL, DisorderKind.OFF_DIAGONAL)),
}
