from .sampling import DisorderKind, DisorderSpec, draw_disorder, generator, sample_disorder
from .ensemble import EnsemblePoint, EnsembleResult, Realization, disorder_ensemble

__all__ = [
    "DisorderKind", "DisorderSpec", "draw_disorder", "generator", "sample_disorder",
    "EnsemblePoint", "EnsembleResult", "Realization", "disorder_ensemble",
]
