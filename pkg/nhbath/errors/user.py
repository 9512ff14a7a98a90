"""Problems with a config or the command line. All of them end the run with
`CONFIG_EXIT_STATUS`."""

from dataclasses import dataclass
from typing import override
from pathlib import Path

import logging
import sys


CONFIG_EXIT_STATUS = 2


class UserError(Exception):
    def __str__(self) -> str:
        return "Unknown user error."

    def handle(self):
        logging.getLogger("nhbath").error(str(self))
        sys.exit(CONFIG_EXIT_STATUS)


@dataclass
class HelpfulUserError(UserError):
    """Raise a user error with a message."""
    msg: str

    @override
    def __str__(self):
        return f"error: {self.msg}"


@dataclass
class FileError(UserError):
    filename: Path

    @override
    def __str__(self):
        return f"config file not found `{self.filename}`"


@dataclass
class MissingKeyError(UserError):
    key: str

    @override
    def __str__(self):
        return f"missing required config key `{self.key}`"


@dataclass
class UnknownExperiment(UserError):
    name: str

    @override
    def __str__(self) -> str:
        return f"`{self.name}` is neither a known experiment nor an existing config file"
