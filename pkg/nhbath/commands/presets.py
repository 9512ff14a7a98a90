from __future__ import annotations

import msgspec
from rich.console import Console
from rich.table import Table

from ..config import prefab_config
from .main import main


@main.command()
def presets():
    """Show the parameter sets behind the figure experiments."""
    table = Table(title="presets")
    table.add_column("experiment")
    table.add_column("settings")
    for experiment, update in prefab_config.items():
        settings = {k: v for k, v in msgspec.structs.asdict(update).items() if v is not None}
        table.add_row(str(experiment), ", ".join(f"{k} = {v}" for k, v in settings.items()))
    Console().print(table)
