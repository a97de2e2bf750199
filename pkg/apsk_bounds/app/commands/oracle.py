from gettext import gettext as _

from apsk_bounds.app import settings
from apsk_bounds.app.commands import common
from apsk_bounds.app.constants import LIKELIHOOD_CLOSED_FORM, LIKELIHOODS
from apsk_bounds.app.models import ChannelParams
from apsk_bounds.app.serializers import OracleRowSerializer
from apsk_bounds.app.tasks import check_block_len, check_oracle_budget, exact_block_ami


def add_parser(subparsers):
    """Register the oracle command."""
    parser = subparsers.add_parser(
        "oracle", help=_("brute force block AMI for small constellations and blocks")
    )
    common.add_constellation_arguments(parser)
    parser.add_argument("--block-len", type=int, default=2, help=_("block length L"))
    common.add_snr_arguments(parser)
    parser.add_argument(
        "--budget",
        type=int,
        default=settings.ORACLE_BUDGET,
        help=_("largest admissible M^L (default %(default)s)"),
    )
    parser.add_argument(
        "--free-reference",
        action="store_true",
        help=_("do not condition on the reference symbol (enumerates all M^L blocks)"),
    )
    parser.add_argument(
        "--likelihood",
        choices=LIKELIHOODS,
        default=LIKELIHOOD_CLOSED_FORM,
        help=_("block likelihood evaluation (default %(default)s)"),
    )
    common.add_mc_arguments(parser)
    common.add_out_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """
    Per-symbol block AMI at every SNR; SNR j uses stream child(j).
    """
    grid = common.snr_grid(args)
    mc = common.mc_config(args)
    constellation = common.constellation(args)
    block_len = check_block_len(args.block_len)
    check_oracle_budget(constellation, block_len, args.budget)

    items = []
    for snr_index, snr_db in enumerate(grid):
        channel = ChannelParams.from_snr_db(snr_db, constellation.avg_energy)
        estimate = exact_block_ami(
            constellation,
            block_len,
            channel,
            mc.child(snr_index),
            budget=args.budget,
            known_reference=not args.free_reference,
            likelihood=args.likelihood,
        )
        items.append((snr_db, estimate))

    notes = {
        "block_size": constellation.size ** block_len,
        "known_reference": not args.free_reference,
        "likelihood": args.likelihood,
    }
    common.write_outputs(
        args, OracleRowSerializer(), items, sample_counts={"oracle": mc.samples}, notes=notes
    )
