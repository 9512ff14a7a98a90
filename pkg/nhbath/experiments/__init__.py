from ..config import Experiment, ExperimentConfig
from .base import ExperimentBase, PrerequisitesFailed
from .bath import GbzExperiment, SpectrumExperiment
from .bound import BoundExperiment, Fig2Experiment
from .dressed import DressedExperiment, Fig3Experiment, Fig4Experiment
from .dynamics import DynamicsExperiment, Fig5Experiment
from .disorder import DisorderExperiment

experiments: dict[Experiment, type[ExperimentBase]] = {
    Experiment.SPECTRUM: SpectrumExperiment,
    Experiment.GBZ: GbzExperiment,
    Experiment.BOUND: BoundExperiment,
    Experiment.DRESSED: DressedExperiment,
    Experiment.DYNAMICS: DynamicsExperiment,
    Experiment.DISORDER: DisorderExperiment,
    Experiment.FIG2: Fig2Experiment,
    Experiment.FIG3: Fig3Experiment,
    Experiment.FIG4: Fig4Experiment,
    Experiment.FIG5: Fig5Experiment,
    Experiment.FIGS3: DisorderExperiment,
}


def create_experiment(cfg: ExperimentConfig) -> ExperimentBase:
    """Instantiate the experiment of `cfg` and check that it can run."""
    if cfg.experiment is None:
        raise PrerequisitesFailed("no experiment given")
    instance = experiments[cfg.experiment](cfg)
    instance.check_prerequisites()
    return instance


__all__ = ["experiments", "create_experiment", "ExperimentBase", "PrerequisitesFailed"]
