from gettext import gettext as _

from apsk_bounds.app.commands import common
from apsk_bounds.app.serializers import ComparisonRowSerializer
from apsk_bounds.app.tasks import capacity_comparison


def add_parser(subparsers):
    """Register the compare command."""
    parser = subparsers.add_parser(
        "compare", help=_("coherent capacities of several constellations over SNR")
    )
    parser.add_argument(
        "--constellation",
        dest="constellations",
        type=common.constellation_triple,
        action="append",
        required=True,
        metavar="N,P,r",
        help=_("an APSK(N,P) constellation with ring ratio r; repeat for more"),
    )
    common.add_snr_arguments(parser)
    common.add_mc_arguments(parser)
    common.add_out_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """Every constellation shares the stream of an SNR point."""
    grid = common.snr_grid(args)
    mc = common.mc_config(args)
    rows = capacity_comparison([tuple(item) for item in args.constellations], grid, mc)
    common.write_outputs(
        args, ComparisonRowSerializer(), rows, sample_counts={"coherent": mc.samples}
    )
