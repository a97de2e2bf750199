from gettext import gettext as _

from apsk_bounds.app import settings
from apsk_bounds.app.commands import common
from apsk_bounds.app.constants import BLOCK_TERM_EXACT, BLOCK_TERM_LITERAL, TERM_STREAMS
from apsk_bounds.app.serializers import BoundsRowSerializer
from apsk_bounds.app.tasks import bounds_curve


def add_parser(subparsers):
    """Register the bounds command."""
    parser = subparsers.add_parser(
        "bounds", help=_("upper and lower bounds on the noncoherent capacity")
    )
    common.add_constellation_arguments(parser)
    common.add_snr_arguments(parser)
    parser.add_argument(
        "--block-lengths",
        type=common.int_list,
        required=True,
        help=_("comma separated block lengths L, each at least 2"),
    )
    parser.add_argument(
        "--exact-block-term",
        action="store_true",
        help=_("evaluate I(theta; R | S) with the block norm of a drawn ring vector"),
    )
    parser.add_argument(
        "--oracle-check",
        action="store_true",
        help=_("add the brute force block AMI where M^L is within the oracle budget"),
    )
    parser.add_argument(
        "--oracle-budget",
        type=int,
        default=settings.ORACLE_BUDGET,
        help=_("largest M^L for the oracle (default %(default)s)"),
    )
    common.add_mc_arguments(parser)
    common.add_out_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """
    Bounds for every (SNR, L), SNR-major.
    """
    grid = common.snr_grid(args)
    mc = common.mc_config(args)
    constellation = common.constellation(args)
    block_term = BLOCK_TERM_EXACT if args.exact_block_term else BLOCK_TERM_LITERAL
    rows = bounds_curve(
        constellation,
        args.block_lengths,
        grid,
        mc,
        block_term=block_term,
        oracle_check=args.oracle_check,
        oracle_budget=args.oracle_budget,
    )
    sample_counts = {name: mc.samples for name in TERM_STREAMS}
    if not args.oracle_check:
        del sample_counts["oracle"]
    notes = {
        "block_term": block_term,
        "constellation": constellation.label,
        "base_amplitude": constellation.base_amplitude,
        "oracle_block_lengths": [
            block_len
            for block_len in args.block_lengths
            if args.oracle_check and constellation.size ** block_len <= args.oracle_budget
        ],
    }
    common.write_outputs(
        args, BoundsRowSerializer(constellation.size), rows, sample_counts, notes
    )
