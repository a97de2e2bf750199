import argparse
import logging
import math

from datetime import datetime, timezone
from gettext import gettext as _

import apsk_bounds

from apsk_bounds.app import settings
from apsk_bounds.app.models import McConfig, RandomStreamSpec, RunManifest, build_apsk
from apsk_bounds.app.serializers import manifest_path, write_manifest


log = logging.getLogger(__name__)

# Namespace entries that are not part of the reproducible parameter set.
NON_PARAMETERS = ("func", "verbose", "quiet")


def inclusive_grid(start, stop, step, name):
    """
    ``start, start + step, ...`` up to and including ``stop``.

    The number of points is ``floor((stop - start) / step + 1e-9) + 1`` and values are
    rounded to 10 decimals, so 0:1:20 has exactly 21 points.

    Raises:
        ValueError: If step is not positive or stop < start.

    """
    values = (start, stop, step)
    if not all(math.isfinite(value) for value in values):
        raise ValueError(_("{} grid needs finite values.").format(name))
    if step <= 0:
        raise ValueError(_("{} step must be positive, got {:g}.").format(name, step))
    if stop < start:
        raise ValueError(_("{} stop {:g} is below start {:g}.").format(name, stop, start))
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + index * step, 10) for index in range(count)]


def int_list(text):
    """argparse type for a comma separated list of integers, i.e. "2,8,16"."""
    try:
        values = [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(_("expected integers separated by commas"))
    if not values:
        raise argparse.ArgumentTypeError(_("expected at least one integer"))
    return values


def ratio_range(text):
    """argparse type for lo:step:hi."""
    parts = text.split(":")
    try:
        low, step, high = (float(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(_("expected lo:step:hi, got '{}'").format(text))
    return [low, step, high]


def constellation_triple(text):
    """argparse type for N,P,r."""
    parts = text.split(",")
    try:
        n_rings, phases, ratio = int(parts[0]), int(parts[1]), float(parts[2])
    except (ValueError, IndexError):
        raise argparse.ArgumentTypeError(_("expected N,P,r, got '{}'").format(text))
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(_("expected N,P,r, got '{}'").format(text))
    return [n_rings, phases, ratio]


def add_constellation_arguments(parser, ring_ratio=True):
    """--rings, --phases and (optionally) --ring-ratio."""
    parser.add_argument("--rings", type=int, required=True, help=_("number of rings N"))
    parser.add_argument("--phases", type=int, required=True, help=_("phases per ring P"))
    if ring_ratio:
        parser.add_argument(
            "--ring-ratio", type=float, required=True, help=_("ratio r between ring amplitudes")
        )


def add_snr_arguments(parser):
    """--snr-start, --snr-stop and --snr-step in dB."""
    parser.add_argument("--snr-start", type=float, required=True, help=_("first E_s/N_0 in dB"))
    parser.add_argument("--snr-stop", type=float, help=_("last E_s/N_0 in dB (default start)"))
    parser.add_argument("--snr-step", type=float, default=1.0, help=_("grid step in dB"))


def add_mc_arguments(parser):
    """Sample count, seed and scheduling."""
    parser.add_argument(
        "--samples",
        type=int,
        default=settings.DEFAULT_SAMPLES,
        help=_("Monte Carlo samples per estimate (default %(default)s)"),
    )
    parser.add_argument(
        "--seed", type=int, default=settings.DEFAULT_SEED, help=_("root seed (default %(default)s)")
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=settings.DEFAULT_WORKERS,
        help=_("worker threads; never changes the output"),
    )
    parser.add_argument(
        "--chunk-size",
        type=int,
        default=settings.DEFAULT_CHUNK_SIZE,
        help=_("samples per scheduled task; never changes the output"),
    )


def add_out_argument(parser):
    """--out, the CSV path; the manifest goes next to it."""
    parser.add_argument("--out", required=True, help=_("CSV output path"))


def snr_grid(args):
    """The SNR grid of the parsed arguments."""
    stop = args.snr_start if args.snr_stop is None else args.snr_stop
    return inclusive_grid(args.snr_start, stop, args.snr_step, "SNR")


def mc_config(args):
    """McConfig of the parsed arguments."""
    return McConfig(
        samples=args.samples,
        stream=RandomStreamSpec(seed=args.seed),
        chunk_size=args.chunk_size,
        workers=args.threads,
    )


def constellation(args, allow_degenerate=False):
    """Constellation of the parsed arguments."""
    return build_apsk(args.rings, args.phases, args.ring_ratio, allow_degenerate=allow_degenerate)


def parameters(args):
    """The resolved parameter set of a command, JSON friendly."""
    return {
        name: value for name, value in sorted(vars(args).items()) if name not in NON_PARAMETERS
    }


def write_outputs(args, serializer, items, sample_counts=None, notes=None):
    """
    Write the CSV file and its manifest.

    Args:
        args (argparse.Namespace): Parsed arguments of the command.
        serializer (CsvSerializer): Serializer for ``items``.
        items: What the serializer writes.
        sample_counts (dict): Samples per estimate kind.
        notes (dict): Anything else a reader of the output needs.

    Returns:
        RunManifest: The manifest written.

    """
    serializer.write(items, args.out)
    manifest = RunManifest(
        tool_version=apsk_bounds.__version__,
        command=args.command,
        parameters=parameters(args),
        seed=getattr(args, "seed", settings.DEFAULT_SEED),
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        sample_counts=sample_counts or {},
        notes=notes or {},
    )
    write_manifest(manifest, manifest_path(args.out))
    log.info(_("Manifest written to {}").format(manifest_path(args.out)))
    return manifest
