"""
Argument parsing pieces shared by the command groups.
"""
import argparse
import sys
from typing import Optional, Tuple, get_args

from tripsep.core.errors import InvalidInputError
from tripsep.schemas.runs import RunConfig
from tripsep.schemas.states import StateName, StateSpec


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so bad flags map to exit code 1."""

    def error(self, message: str):
        raise InvalidInputError(f"invalid command line: {message}")


def parse_dims(text: str) -> Tuple[int, int, int]:
    try:
        dims = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"dims must look like 2,2,3 (got {text!r})")
    if len(dims) != 3:
        raise argparse.ArgumentTypeError(f"exactly three dims are required (got {text!r})")
    return dims


def common_options() -> CliParser:
    parser = CliParser(add_help=False)
    parser.add_argument("--threads", type=int, default=None, help="Worker threads")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    return parser


def add_state_options(parser: argparse.ArgumentParser):
    parser.add_argument("--state", required=True, choices=get_args(StateName))
    parser.add_argument("--dims", type=parse_dims, default=None, help="Local dimensions a,b,c")
    parser.add_argument("--seed", type=int, default=None, help="Seed of the random families")
    parser.add_argument("--cut", choices=("AB", "AC", "BC"), default="AB",
                        help="Entangled pair of random_semiseparable")
    parser.add_argument("--min-schmidt", type=float, default=None,
                        help="Rejection floor on the second Schmidt coefficient")


def add_bound_options(parser: argparse.ArgumentParser, seed_flag: str = "--seed"):
    """Knobs of the mixed-state bounds; ``seed_flag`` names the optimizer seed flag."""
    parser.add_argument("--method", default="all",
                        choices=("direct", "kronecker", "analytic", "quasipure", "all"))
    parser.add_argument("--tol", type=float, default=None, help="Verdict threshold")
    parser.add_argument("--rank-tol", type=float, default=None)
    parser.add_argument("--trunc-tol", type=float, default=None)
    parser.add_argument("--max-factors", type=int, default=None)
    parser.add_argument("--restarts", type=int, default=None)
    parser.add_argument("--max-iters", type=int, default=None)
    parser.add_argument("--opt-tol", type=float, default=None)
    parser.add_argument(seed_flag, dest="opt_seed", type=int, default=None,
                        help="Seed of the optimizer restarts")


def state_spec(args: argparse.Namespace) -> StateSpec:
    return StateSpec(
        name=args.state,
        dims=args.dims,
        seed=args.seed,
        cut=args.cut,
        min_schmidt=args.min_schmidt,
    )


def run_config(args: argparse.Namespace, command: str, **fields) -> RunConfig:
    """RunConfig from the flags that were given; the rest keep their settings defaults."""
    knobs = {
        "method": "method",
        "tol": "tol",
        "rank_tol": "rank_tol",
        "trunc_tol": "trunc_tol",
        "max_factors": "max_factors",
        "restarts": "restarts",
        "max_iters": "max_iters",
        "opt_tol": "opt_tol",
        "seed": "opt_seed",
        "threads": "threads",
    }
    for field, flag in knobs.items():
        value = getattr(args, flag, None)
        if value is not None:
            fields.setdefault(field, value)
    return RunConfig(command=command, **fields)


def emit(text: str, path: Optional[str] = None):
    """Print ``text`` unless it already went to ``path``."""
    if not path:
        sys.stdout.write(text)
