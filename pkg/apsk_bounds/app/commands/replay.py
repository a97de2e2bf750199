import argparse
import logging

from gettext import gettext as _

from apsk_bounds.app.serializers import ManifestError, read_manifest


log = logging.getLogger(__name__)


def add_parser(subparsers):
    """Register the replay command."""
    parser = subparsers.add_parser(
        "replay", help=_("re-run the command recorded in a manifest")
    )
    parser.add_argument("manifest", help=_("path of a .manifest.json file"))
    parser.add_argument("--out", required=True, help=_("CSV output path of the replay"))
    parser.set_defaults(func=run)


def run(args):
    """
    Rebuild the recorded arguments and run the recorded command with a new --out.

    Raises:
        ManifestError: If the manifest cannot be read or names an unknown command.

    """
    from apsk_bounds.app.commands import COMMANDS

    manifest = read_manifest(args.manifest)
    if manifest.command not in COMMANDS or manifest.command == "replay":
        raise ManifestError(
            args.manifest, _("cannot replay command '{}'").format(manifest.command)
        )
    recorded = dict(manifest.parameters)
    recorded["command"] = manifest.command
    recorded["out"] = args.out
    log.info(
        _("Replaying '{}' of {} (version {})").format(
            manifest.command, manifest.timestamp, manifest.tool_version
        )
    )
    COMMANDS[manifest.command].run(argparse.Namespace(**recorded))
