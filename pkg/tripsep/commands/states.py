"""
State generation commands: gen, mix.
"""
import argparse
import logging

from tripsep.dependencies import add_state_options, common_options, state_spec
from tripsep.services.file_service import FileService
from tripsep.services.state_service import StateService

logger = logging.getLogger(__name__)

# Initialize services
file_service = FileService()
state_service = StateService()


def register(subparsers):
    gen = subparsers.add_parser("gen", parents=[common_options()],
                                help="Write a named or seeded random pure state")
    add_state_options(gen)
    gen.add_argument("--out", required=True, help="Pure-state JSON file")
    gen.set_defaults(handler=generate_state)

    mix = subparsers.add_parser("mix", parents=[common_options()],
                                help="Write x|psi><psi| + (1-x) I/d for a generated state")
    add_state_options(mix)
    mix.add_argument("--x", type=float, required=True, help="Weight of the pure state")
    mix.add_argument("--out", required=True, help="Density-matrix JSON file")
    mix.set_defaults(handler=mix_state)


def generate_state(args: argparse.Namespace) -> int:
    """Generate a pure state and save it."""
    state = state_service.pure_state(state_spec(args))
    file_service.save_pure(state, args.out)
    logger.info(f"Generated {args.state} on dims {state.dims}")
    return 0


def mix_state(args: argparse.Namespace) -> int:
    rho = state_service.noise_mixture(state_spec(args), args.x)
    file_service.save_density(rho, args.out)
    return 0
