import logging
import warnings

from rich.console import Console
from rich.logging import RichHandler
from rich.highlighter import RegexHighlighter

from .version import __version__

logging_setup = False


class NumberHighlighter(RegexHighlighter):
    """Bold for `quoted` names, cyan for complex energies like 0.2-0.6j."""
    highlights = [
        r"`(?P<bold>[^`]*)`",
        r"(?P<repr_number>[-+]?\d+(\.\d+)?(e[-+]?\d+)?[-+]\d+(\.\d+)?(e[-+]?\d+)?j)",
    ]


# Tables go to stdout; log messages to stderr.
console: Console = Console(stderr=True)


def logger():
    return logging.getLogger("nhbath")


def configure(debug: bool = False):
    """Send nhbath logs and Python warnings (from numpy and scipy among
    others) through a single rich handler."""
    global logging_setup
    if logging_setup:
        return

    logging.basicConfig(
        level=logging.DEBUG if debug else logging.INFO,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(show_path=debug, highlighter=NumberHighlighter(), console=console)],
    )
    logging.captureWarnings(True)
    if not debug:
        warnings.filterwarnings("once", category=RuntimeWarning)
    logger().debug("nhbath %s", __version__)

    logging_setup = True
