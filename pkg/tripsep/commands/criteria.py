"""
Criterion commands: pure, mixed.
"""
import argparse
import logging

from tripsep.dependencies import add_bound_options, common_options, emit, run_config
from tripsep.services.analysis_service import AnalysisService
from tripsep.services.file_service import FileService

logger = logging.getLogger(__name__)

# Initialize services
file_service = FileService()
analysis_service = AnalysisService()


def register(subparsers):
    pure = subparsers.add_parser("pure", parents=[common_options()],
                                 help="Exact criterion on a pure-state file")
    pure.add_argument("input", help="Pure-state JSON file")
    pure.add_argument("--tol", type=float, default=None, help="Separability threshold")
    pure.add_argument("--out", default=None, help="Report file; stdout when omitted")
    pure.set_defaults(handler=check_pure)

    mixed = subparsers.add_parser("mixed", parents=[common_options()],
                                  help="Lower bounds on a density-matrix file")
    mixed.add_argument("input", help="Density-matrix JSON file")
    add_bound_options(mixed)
    mixed.add_argument("--format", dest="output_format", choices=("json", "csv"),
                       default="json")
    mixed.add_argument("--out", default=None, help="Report file; stdout when omitted")
    mixed.set_defaults(handler=check_mixed)


def check_pure(args: argparse.Namespace) -> int:
    config = run_config(args, "pure", method="pure", input_path=args.input,
                        output_path=args.out)
    state = file_service.load_pure(args.input)
    report = analysis_service.analyse_pure(state, config)
    emit(file_service.write_json(report.model_dump(mode="json"), args.out), args.out)
    return 0


def check_mixed(args: argparse.Namespace) -> int:
    """Run one bound method, or all of them, on a density matrix."""
    config = run_config(args, "mixed", input_path=args.input, output_path=args.out,
                        output_format=args.output_format)
    rho = file_service.load_density(args.input)

    if config.output_format == "csv":
        rows = analysis_service.method_rows(rho, config)
        emit(file_service.write_csv(rows, args.out), args.out)
        return 0

    reports = analysis_service.analyse_mixed(rho, config)
    if config.method == "all":
        payload = [report.model_dump(mode="json") for report in reports]
    else:
        payload = reports[0].model_dump(mode="json")
    emit(file_service.write_json(payload, args.out), args.out)
    return 0
