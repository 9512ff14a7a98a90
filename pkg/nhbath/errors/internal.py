from typing import Any
from dataclasses import dataclass, field
import logging


@dataclass
class InternalError(Exception):
    """A broken invariant inside nhbath; `irritants` are the values involved."""
    msg: str
    irritants: list[Any] = field(default_factory=list)

    def __str__(self):
        if not self.irritants:
            return f"Internal error: {self.msg}"
        return f"Internal error: {self.msg} ({', '.join(repr(i) for i in self.irritants)})"


def bug_contact(e: Exception):
    logging.getLogger("nhbath").error(
        "`%s` is due to an internal bug in nhbath. Please file an issue with the "
        "stack trace below and the config plus `manifest.json` of the run.",
        type(e).__name__)
