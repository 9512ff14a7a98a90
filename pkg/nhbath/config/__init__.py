"""Configuration. A run is described by an `ExperimentConfig`, layered as

    ExperimentConfig() | preset | config file | command-line overrides

where every layer but the first is a `ConfigUpdate`.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

import msgspec
import tomllib

from .experiment import Experiment
from .config_data import ExperimentConfig
from .config_update import ConfigUpdate, SearchWindow, prefab_config
from .validate import Diagnostic, Severity, validate

from ..logging import logger
from ..errors.user import FileError, HelpfulUserError, MissingKeyError, UnknownExperiment

log = logger()


def _convert(data: Any, origin: str) -> ConfigUpdate:
    try:
        return msgspec.convert(data, type=ConfigUpdate)
    except msgspec.ValidationError as e:
        raise HelpfulUserError(f"Could not read config from {origin}: {e}")


def read_config_from_toml(path: Path) -> ConfigUpdate:
    """Read a flat TOML config file, `key = value` per line."""
    try:
        content = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise FileError(path)
    try:
        data: Any = tomllib.loads(content)
    except tomllib.TOMLDecodeError as e:
        raise HelpfulUserError(f"Could not read config `{path}`: {e}")
    log.debug("Read config from `%s`", path)
    return _convert(data, f"`{path}`")


def parse_value(text: str) -> Any:
    """A TOML value, or the bare string if it does not parse as one."""
    try:
        return tomllib.loads(f"v = {text}")["v"]
    except tomllib.TOMLDecodeError:
        return text


def parse_overrides(args: list[str]) -> ConfigUpdate:
    """Turn `--key=value` arguments into a `ConfigUpdate`."""
    data: dict[str, Any] = {}
    for arg in args:
        key, sep, value = arg.removeprefix("--").partition("=")
        if not sep:
            raise HelpfulUserError(f"Override `{arg}` should read `--key=value`")
        data[key] = parse_value(value)
    return _convert(data, "the command line")


def read_target(target: str) -> ConfigUpdate:
    """A target is either an experiment name or a path to a config file."""
    if target in Experiment:
        return ConfigUpdate(experiment=Experiment(target))
    path = Path(target)
    if path.suffix == ".toml" or path.exists():
        return read_config_from_toml(path)
    raise UnknownExperiment(target)


def resolve_config(target: str, overrides: list[str] | None = None) -> ExperimentConfig:
    from_target = read_target(target)
    from_cli = parse_overrides(overrides or [])
    experiment = from_cli.experiment or from_target.experiment
    if experiment is None:
        raise MissingKeyError("experiment")
    return ExperimentConfig() | prefab_config.get(experiment) | from_target | from_cli


__all__ = [
    "Experiment", "ExperimentConfig", "ConfigUpdate", "SearchWindow", "prefab_config",
    "Diagnostic", "Severity", "validate", "read_config_from_toml", "parse_overrides",
    "parse_value", "read_target", "resolve_config",
]
