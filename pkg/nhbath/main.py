from .logging import logger

import sys
import traceback

from .commands import main
from .errors.internal import bug_contact
from .errors.numeric import NUMERIC_EXIT_STATUS, NumericError
from .errors.user import UserError


def cli():
    """Entry point. Config problems exit with status 2 and numeric failures
    with status 3; anything else is a bug and keeps its traceback."""
    try:
        main()
    except KeyboardInterrupt:
        logger().info("Interrupted, the output directory has no manifest")
        sys.exit(0)
    except UserError as e:
        e.handle()
    except NumericError as e:
        logger().error("%s: %s", e.name, e)
        sys.exit(NUMERIC_EXIT_STATUS)
    except Exception as e:
        bug_contact(e)
        traceback.print_exc()
        raise


if __name__ == "__main__":
    cli()
