import logging

from gettext import gettext as _

from apsk_bounds.app import settings
from apsk_bounds.app.commands import common
from apsk_bounds.app.models import SweepSpec
from apsk_bounds.app.serializers import CoherentRowSerializer, SweepRowSerializer
from apsk_bounds.app.tasks import capacity_comparison, ring_ratio_sweep


log = logging.getLogger(__name__)


def add_parser(subparsers):
    """Register the coherent command."""
    parser = subparsers.add_parser(
        "coherent", help=_("coherent constellation-constrained capacity over SNR")
    )
    common.add_constellation_arguments(parser, ring_ratio=False)
    ratio = parser.add_mutually_exclusive_group(required=True)
    ratio.add_argument("--ring-ratio", type=float, help=_("ratio r between ring amplitudes"))
    ratio.add_argument(
        "--ring-ratio-sweep",
        type=common.ratio_range,
        metavar="LO:STEP:HI",
        help=_("sweep r over an inclusive grid and mark the best r per SNR"),
    )
    common.add_snr_arguments(parser)
    common.add_mc_arguments(parser)
    common.add_out_argument(parser)
    parser.set_defaults(func=run)


def _run_sweep(args, grid, mc):
    low, step, high = args.ring_ratio_sweep
    spec = SweepSpec(
        n_rings=args.rings,
        phases_per_ring=args.phases,
        r_grid=common.inclusive_grid(low, high, step, "ring ratio"),
        snr_grid_db=grid,
        mc=mc,
    )
    result = ring_ratio_sweep(spec)
    ties = {}
    for snr_db, (first, last) in result.tie_intervals.items():
        ties["{:g}".format(snr_db)] = [first, last]
        if first != last:
            log.warning(
                _("{:g} dB: ring ratios {:g} to {:g} are within {:g} standard errors of the best.")
                .format(snr_db, first, last, settings.ARGMAX_TIE_SIGMAS)
            )
    notes = {
        "common_random_numbers": spec.common_random_numbers,
        "argmax_tie_sigmas": settings.ARGMAX_TIE_SIGMAS,
        "tie_intervals": ties,
    }
    common.write_outputs(
        args,
        SweepRowSerializer(args.rings * args.phases),
        result.rows,
        sample_counts={"coherent": mc.samples},
        notes=notes,
    )


def run(args):
    """
    Coherent capacity at one ring ratio, or a ring ratio sweep.
    """
    grid = common.snr_grid(args)
    mc = common.mc_config(args)
    if args.ring_ratio_sweep is not None:
        _run_sweep(args, grid, mc)
        return

    rows = capacity_comparison([(args.rings, args.phases, args.ring_ratio)], grid, mc)
    common.write_outputs(
        args,
        CoherentRowSerializer(args.rings * args.phases),
        [(row.snr_db, row.estimate) for row in rows],
        sample_counts={"coherent": mc.samples},
    )
