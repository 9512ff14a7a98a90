from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import override

import numpy as np
from numpy.typing import ArrayLike

from ..config import ExperimentConfig, Severity, validate
from ..model import Wavefunction
from ..io import OutputDirectory

type Table = dict[str, ArrayLike]


@dataclass
class PrerequisitesFailed(Exception):
    msg: str

    @override
    def __str__(self):
        return self.msg


class ExperimentBase:
    """One computation driven by an `ExperimentConfig`; `run` writes its
    tables into an output directory."""
    def __init__(self, cfg: ExperimentConfig):
        self.cfg = cfg

    def check_prerequisites(self):
        """When the config cannot be run, raise PrerequisitesFailed."""
        errors = [d for d in validate(self.cfg) if d.severity is Severity.ERROR]
        if errors:
            raise PrerequisitesFailed("; ".join(f"`{d.key}`: {d.message}" for d in errors))

    def run(self, out: OutputDirectory):  # pyright: ignore[reportUnusedParameter]
        raise NotImplementedError


def profile(psi: Wavefunction) -> Table:
    """Photon weights in long format: j, sublattice, weight."""
    weights = psi.weights()
    return {
        "j": np.repeat(np.arange(1, psi.L + 1), 2),
        "sublattice": np.tile(["a", "b"], psi.L),
        "weight": weights.reshape(-1),
    }


def tagged(table: Mapping[str, ArrayLike], **tags: object) -> Table:
    """Prepend constant columns to a table."""
    n = len(np.asarray(next(iter(table.values()))))
    return {name: np.full(n, value) for name, value in tags.items()} | dict(table)


def stack(tables: Sequence[Mapping[str, ArrayLike]]) -> Table:
    """Concatenate tables with the same columns."""
    if not tables:
        return {}
    return {name: np.concatenate([np.atleast_1d(np.asarray(t[name])) for t in tables])
            for name in tables[0]}


def rows(records: Sequence[Mapping[str, object]]) -> Table:
    """Columns from a list of row records."""
    if not records:
        return {}
    return {name: np.array([r[name] for r in records]) for name in records[0]}
