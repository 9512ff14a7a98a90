from __future__ import annotations

from dataclasses import dataclass, replace
from enum import StrEnum

from ..errors.numeric import AttachmentOutOfRange, DegenerateGbz, InvalidParameter


class Boundary(StrEnum):
    """Boundary condition of the photonic lattice.

    - `OBC`: open chain of `L` unit cells
    - `PBC`: ring, the intercell hop `J2` also couples `b_L` to `a_1`
    """
    OBC = "obc"
    PBC = "pbc"


class Sublattice(StrEnum):
    """Sublattice of a unit cell, `a` is the left site and `b` the right one."""
    A = "a"
    B = "b"

    @property
    def offset(self) -> int:
        return 0 if self is Sublattice.A else 1


@dataclass(frozen=True)
class BathParams:
    """Couplings of the dissipative SSH bath.

    Attributes:
        J1: intracell hopping.
        J2: intercell hopping.
        kappa: rate of the nonlocal (intracell) photon loss.
        L: number of unit cells.
        boundary: open or periodic.
    """
    J1: float
    J2: float
    kappa: float
    L: int
    boundary: Boundary = Boundary.OBC

    def __post_init__(self):
        if not self.kappa >= 0:
            raise InvalidParameter("kappa", self.kappa, "kappa >= 0")
        if self.L < 2:
            raise InvalidParameter("L", self.L, "L >= 2")

    @property
    def j1_minus(self) -> float:
        """Hopping from `b_j` to `a_j`, J1 - kappa/2."""
        return self.J1 - self.kappa / 2

    @property
    def j1_plus(self) -> float:
        """Hopping from `a_j` to `b_j`, J1 + kappa/2."""
        return self.J1 + self.kappa / 2

    @property
    def nonreciprocity(self) -> float:
        """The ratio (J1 + kappa/2) / (J1 - kappa/2), the square of the GBZ radius
        whenever it is positive."""
        if self.j1_minus == 0:
            raise DegenerateGbz(self.J1, self.kappa)
        return self.j1_plus / self.j1_minus

    @property
    def uniform_loss(self) -> complex:
        return -0.5j * self.kappa

    def with_boundary(self, boundary: Boundary) -> BathParams:
        return replace(self, boundary=boundary)

    def with_size(self, L: int) -> BathParams:
        return replace(self, L=L)


@dataclass(frozen=True)
class EmitterAttachment:
    """A two-level emitter coupled to a single lattice site.

    Attributes:
        unit_cell: 1-based unit cell index `j0`.
        sublattice: the site within the cell.
        g: coupling strength.
        delta0: detuning.
        gamma: emitter decay rate.
    """
    unit_cell: int
    sublattice: Sublattice = Sublattice.A
    g: float = 0.5
    delta0: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        if not self.g >= 0:
            raise InvalidParameter("g", self.g, "g >= 0")
        if not self.gamma >= 0:
            raise InvalidParameter("gamma", self.gamma, "gamma >= 0")

    @property
    def delta(self) -> complex:
        """Complex detuning delta0 - i gamma/2."""
        return complex(self.delta0, -self.gamma / 2)

    @property
    def cell_offset(self) -> int:
        """Position in units of cells with the `b` site counted one further,
        the exponent entering the similarity transform."""
        return self.unit_cell + self.sublattice.offset

    def site_index(self, L: int) -> int:
        """Index of the attached site inside the photonic block."""
        self.check(L)
        return 2 * (self.unit_cell - 1) + self.sublattice.offset

    def check(self, L: int):
        if not 1 <= self.unit_cell <= L:
            raise AttachmentOutOfRange(self.unit_cell, L)

    def replace(self, **kwargs: object) -> EmitterAttachment:
        return replace(self, **kwargs)  # pyright: ignore[reportArgumentType]
