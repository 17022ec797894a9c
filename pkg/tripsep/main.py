"""
Command-line entry point.
"""
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from tripsep.commands import criteria, states, sweeps
from tripsep.core.config import settings
from tripsep.core.errors import CriterionError
from tripsep.dependencies import CliParser
from tripsep.managers.executor_manager import worker_pool

logger = logging.getLogger(__name__)


def build_parser() -> CliParser:
    parser = CliParser(
        prog=settings.PROJECT_NAME,
        description="Full-separability criterion and lower bounds for tripartite states",
    )
    parser.add_argument("--version", action="version", version=settings.VERSION)
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Register command groups
    states.register(subparsers)
    criteria.register(subparsers)
    sweeps.register(subparsers)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
        # Configure logging; stdout stays reserved for reports
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else settings.LOG_LEVEL,
            stream=sys.stderr,
        )
        with worker_pool(args.threads or settings.THREADS):
            return args.handler(args)
    except CriterionError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except ValidationError as e:
        logger.error(f"Invalid configuration: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(run())
