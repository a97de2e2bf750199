import argparse
import logging
import sys

from gettext import gettext as _

import apsk_bounds

from apsk_bounds.app.commands import bounds, coherent, compare, constellation, oracle, replay
from apsk_bounds.app.constants import EXIT_ESTIMATOR, EXIT_OK, EXIT_USAGE


log = logging.getLogger(__name__)

PROG = "apsk-bounds"

COMMANDS = {
    "bounds": bounds,
    "coherent": coherent,
    "compare": compare,
    "constellation": constellation,
    "oracle": oracle,
    "replay": replay,
}


def build_parser():
    """
    The argument parser of the apsk-bounds command line.
    """
    parser = argparse.ArgumentParser(
        prog=PROG,
        description=_("Capacity bounds of APSK over the blockwise noncoherent AWGN channel."),
    )
    parser.add_argument("--version", action="version", version=apsk_bounds.__version__)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="count", default=0, help=_("more logging"))
    verbosity.add_argument("--quiet", action="store_true", help=_("errors only"))
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for command in COMMANDS.values():
        command.add_parser(subparsers)
    return parser


def _configure_logging(args):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def _fail(code, error):
    sys.stderr.write("{}: error: {}\n".format(PROG, error))
    return code


def main(argv=None):
    """
    Run the command line.

    Args:
        argv (list): Arguments without the program name, default sys.argv[1:].

    Returns:
        int: 0 on success, 2 on invalid arguments, 3 if an estimate failed.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code
    _configure_logging(args)
    try:
        args.func(args)
    except ValueError as error:
        return _fail(EXIT_USAGE, error)
    except RuntimeError as error:
        log.debug(_("Estimation failed"), exc_info=True)
        return _fail(EXIT_ESTIMATOR, error)
    except OSError as error:
        return _fail(EXIT_USAGE, error)
    return EXIT_OK


def entry_point():
    """console_scripts entry point."""
    sys.exit(main())
