"""
Table commands: sweep, profile.
"""
import argparse
import logging

from tripsep.dependencies import (
    add_bound_options, add_state_options, common_options, emit, run_config, state_spec,
)
from tripsep.services.analysis_service import AnalysisService
from tripsep.services.file_service import FileService

logger = logging.getLogger(__name__)

# Initialize services
file_service = FileService()
analysis_service = AnalysisService()


def register(subparsers):
    sweep = subparsers.add_parser("sweep", parents=[common_options()],
                                  help="One bound over a grid of mixing weights, as CSV")
    add_state_options(sweep)
    add_bound_options(sweep, seed_flag="--opt-seed")
    sweep.add_argument("--x-start", type=float, required=True)
    sweep.add_argument("--x-end", type=float, required=True)
    sweep.add_argument("--x-step", type=float, required=True)
    sweep.add_argument("--out", default=None, help="CSV file; stdout when omitted")
    sweep.set_defaults(handler=run_sweep)

    profile = subparsers.add_parser("profile", parents=[common_options()],
                                    help="Kronecker bound with 1..K factors, as CSV")
    profile.add_argument("input", help="Density-matrix JSON file")
    add_bound_options(profile)
    profile.add_argument("--out", default=None, help="CSV file; stdout when omitted")
    profile.set_defaults(handler=run_profile)


def run_sweep(args: argparse.Namespace) -> int:
    config = run_config(args, "sweep", output_path=args.out, output_format="csv")
    xs = analysis_service.grid(args.x_start, args.x_end, args.x_step)
    logger.info(f"Sweeping {args.state} over {len(xs)} points with {config.method}")
    rows = analysis_service.sweep(state_spec(args), xs, config)
    emit(file_service.write_csv(rows, args.out), args.out)
    return 0


def run_profile(args: argparse.Namespace) -> int:
    config = run_config(args, "profile", method="kronecker", input_path=args.input,
                        output_path=args.out, output_format="csv")
    rho = file_service.load_density(args.input)
    rows = analysis_service.profile(rho, config)
    emit(file_service.write_csv(rows, args.out), args.out)
    return 0
