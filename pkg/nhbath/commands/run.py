from __future__ import annotations

from dataclasses import replace
from pathlib import Path

import msgspec
import rich_click as click

from ..config import Diagnostic, ExperimentConfig, Severity, resolve_config
from ..config import validate as validate_config
from ..experiments import PrerequisitesFailed, create_experiment
from ..errors.user import HelpfulUserError
from ..io import OutputDirectory
from ..logging import logger
from .main import main

log = logger()

OVERRIDES = {"ignore_unknown_options": True, "allow_extra_args": True}


def report(diagnostics: list[Diagnostic]):
    for d in diagnostics:
        match d.severity:
            case Severity.INFO:
                log.info("`%s`: %s", d.key, d.message)
            case Severity.WARNING:
                log.warning("`%s`: %s", d.key, d.message)
            case Severity.ERROR:
                log.error("`%s`: %s", d.key, d.message)


def run_config(cfg: ExperimentConfig) -> Path:
    """Run a resolved config; returns the output directory."""
    report(validate_config(cfg))
    try:
        experiment = create_experiment(cfg)
    except PrerequisitesFailed as e:
        raise HelpfulUserError(f"cannot run `{cfg.experiment}`: {e}")

    path = Path(cfg.output_dir)
    with OutputDirectory(path) as out:
        experiment.run(out)
        _ = out.write_manifest(str(cfg.experiment), cfg.seed, msgspec.to_builtins(cfg))
    return path


@main.command(context_settings=OVERRIDES)
@click.argument("target")
@click.argument("overrides", nargs=-1, type=click.UNPROCESSED)
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help="Output directory, `nhbath-<experiment>` by default.")
@click.option("--threads", type=int, envvar="NHBATH_THREADS", default=None,
              help="Worker threads, falls back to `NHBATH_THREADS`.")
def run(target: str, overrides: tuple[str, ...], out: Path | None, threads: int | None):
    """Run an experiment. Any `--key=value` overrides a config key."""
    cfg = resolve_config(target, list(overrides))
    if out is not None:
        cfg = replace(cfg, output=str(out))
    if threads is not None:
        cfg = replace(cfg, threads=threads)
    _ = run_config(cfg)
