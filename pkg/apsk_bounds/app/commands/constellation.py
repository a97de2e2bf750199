from gettext import gettext as _

from apsk_bounds.app.commands import common
from apsk_bounds.app.models import build_apsk
from apsk_bounds.app.serializers import ConstellationPointSerializer


def add_parser(subparsers):
    """Register the constellation command."""
    parser = subparsers.add_parser(
        "constellation", help=_("write the points of an APSK constellation")
    )
    common.add_constellation_arguments(parser)
    parser.add_argument("--avg-energy", type=float, default=1.0, help=_("average energy E_s"))
    parser.add_argument(
        "--allow-degenerate", action="store_true", help=_("accept ring ratio 1 with several rings")
    )
    common.add_out_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """
    Write the points as CSV and print a short summary.
    """
    constellation = build_apsk(
        args.rings,
        args.phases,
        args.ring_ratio,
        avg_energy=args.avg_energy,
        allow_degenerate=args.allow_degenerate,
    )
    mean_energy = float((abs(constellation.points) ** 2).mean())
    summary = {
        "label": constellation.label,
        "base_amplitude": constellation.base_amplitude,
        "ring_amplitudes": [float(a) for a in constellation.ring_amplitudes],
        "mean_energy": mean_energy,
        "min_distance": constellation.min_distance(),
        "peak_to_average_power": constellation.peak_to_average_power(),
    }
    common.write_outputs(args, ConstellationPointSerializer(), constellation, notes=summary)
    print(
        _("{} r={:g}: A={:.6g}, mean energy {:.6g}, d_min={:.6g}, PAPR={:.6g}").format(
            constellation.label,
            constellation.ring_ratio,
            constellation.base_amplitude,
            mean_energy,
            summary["min_distance"],
            summary["peak_to_average_power"],
        )
    )
