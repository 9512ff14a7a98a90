from enum import StrEnum


class Experiment(StrEnum):
    """What `nhbath run` computes.

    - `SPECTRUM`: PBC bands and the OBC spectrum of the bath.
    - `GBZ`: non-Bloch winding over a (J1, kappa) grid.
    - `BOUND`: bound states of one emitter on the infinite ring.
    - `DRESSED`: in-gap dressed state of one emitter on the open chain.
    - `DYNAMICS`: two emitters, each initially excited in turn.
    - `DISORDER`: disorder-averaged dressed state.

    The `FIG*` members run the same computations with reference parameter
    sets filled in, see `prefab_config`.
    """
    SPECTRUM = "spectrum"
    GBZ = "gbz"
    BOUND = "bound"
    DRESSED = "dressed"
    DYNAMICS = "dynamics"
    DISORDER = "disorder"
    FIG2 = "fig2"
    FIG3 = "fig3"
    FIG4 = "fig4"
    FIG5 = "fig5"
    FIGS3 = "figS3"
