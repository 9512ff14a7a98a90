from __future__ import annotations

from typing import override

import sys

import rich_click as click

from ..logging import configure
from ..version import __version__

GROUP_FLAGS = {"-d", "--debug"}


class DefaultRunGroup(click.RichGroup):
    """Group that treats `nhbath TARGET ...` as `nhbath run TARGET ...`."""
    @override
    def parse_args(self, ctx: click.Context, args: list[str]) -> list[str]:
        i = 0
        while i < len(args) and args[i] in GROUP_FLAGS:
            i += 1
        if i < len(args) and not args[i].startswith("-") and args[i] not in self.commands:
            args.insert(i, "run")
        return super().parse_args(ctx, args)


@click.group(
    cls=DefaultRunGroup,
    invoke_without_command=True,
    epilog="Energies are in units of the intercell hopping J2.",
)
@click.rich_config({"commands_before_options": True, "theme": "nord-modern"})
@click.option("-v", "--version", is_flag=True, help="Show version.")
@click.option("-d", "--debug", is_flag=True, help="Enable debugging.")
def main(version: bool = False, debug: bool = False):
    """Emitters coupled to a dissipative, nonreciprocal SSH lattice.

    `nhbath TARGET` runs an experiment; TARGET is an experiment name or a
    TOML config file.
    """
    if version:
        print(f"nhbath {__version__}")
        sys.exit(0)

    configure(debug)
