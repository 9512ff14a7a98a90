"""Failures of the numerical core. The CLI reports these by class name and
exits with `NUMERIC_EXIT_STATUS`."""

from dataclasses import dataclass
from typing import override


NUMERIC_EXIT_STATUS = 3


class NumericError(Exception):
    @property
    def name(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        return "numeric failure"


@dataclass
class InvalidParameter(NumericError):
    key: str
    value: object
    requirement: str

    @override
    def __str__(self) -> str:
        return f"`{self.key}` = {self.value!r} violates {self.requirement}"


@dataclass
class AttachmentOutOfRange(NumericError):
    unit_cell: int
    L: int

    @override
    def __str__(self) -> str:
        return f"unit cell {self.unit_cell} is outside [1, {self.L}]"


@dataclass
class NoConvergence(NumericError):
    what: str
    index: int | None = None

    @override
    def __str__(self) -> str:
        where = "" if self.index is None else f" (at index {self.index})"
        return f"{self.what} did not converge{where}"


@dataclass
class OnSpectrum(NumericError):
    energy: complex
    distance: float

    @override
    def __str__(self) -> str:
        return f"energy {self.energy:.6g} lies on the PBC spectrum (distance {self.distance:.2e})"


@dataclass
class DegenerateGbz(NumericError):
    J1: float
    kappa: float

    @override
    def __str__(self) -> str:
        return f"J1 = {self.J1} with kappa = {self.kappa} leaves no finite real GBZ radius"


@dataclass
class AtTransition(NumericError):
    J1: float
    boundary: float

    @override
    def __str__(self) -> str:
        return f"J1 = {self.J1} sits on the non-Bloch phase boundary |J1| = {self.boundary:.8g}"


@dataclass
class PreconditionViolated(NumericError):
    msg: str

    @override
    def __str__(self) -> str:
        return self.msg


@dataclass
class RootCountMismatch(NumericError):
    expected: int
    found: int

    @override
    def __str__(self) -> str:
        return f"expected {self.expected} theta roots, found {self.found} (edge modes present?)"


@dataclass
class NoInGapState(NumericError):
    gap: tuple[float, float]

    @override
    def __str__(self) -> str:
        return f"no emitter-hybridized eigenvalue with Re E in ({self.gap[0]:.6g}, {self.gap[1]:.6g})"


@dataclass
class SingularMatrix(NumericError):
    energy: complex
    condition: float

    @override
    def __str__(self) -> str:
        return f"resolvent is singular at E = {self.energy:.6g} (condition number {self.condition:.2e})"


@dataclass
class NewtonDiverged(NumericError):
    seed: complex

    @override
    def __str__(self) -> str:
        return f"Newton iteration from {self.seed:.6g} diverged"
