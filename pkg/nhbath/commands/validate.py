from __future__ import annotations

import sys

import rich_click as click
from rich.console import Console
from rich.table import Table

from ..config import Severity, resolve_config
from ..config import validate as validate_config
from ..errors.user import CONFIG_EXIT_STATUS
from .main import main
from .run import OVERRIDES

STYLE = {Severity.INFO: "cyan", Severity.WARNING: "yellow", Severity.ERROR: "bold red"}


@main.command(context_settings=OVERRIDES)
@click.argument("target")
@click.argument("overrides", nargs=-1, type=click.UNPROCESSED)
def validate(target: str, overrides: tuple[str, ...]):
    """Check a config for physics and numerics problems without running it."""
    cfg = resolve_config(target, list(overrides))
    diagnostics = validate_config(cfg)
    console = Console()
    if not diagnostics:
        console.print(f"`{cfg.experiment}`: no diagnostics")
        return

    table = Table(title=f"diagnostics for {cfg.experiment}")
    table.add_column("severity")
    table.add_column("key")
    table.add_column("message")
    for d in diagnostics:
        table.add_row(f"[{STYLE[d.severity]}]{d.severity}[/]", d.key, d.message)
    console.print(table)

    if any(d.severity is Severity.ERROR for d in diagnostics):
        sys.exit(CONFIG_EXIT_STATUS)
