import json

from dataclasses import asdict, fields
from gettext import gettext as _

from apsk_bounds.app.models import RunManifest


class ManifestError(ValueError):
    """
    Exception to signal an unreadable run manifest.
    """

    def __init__(self, path, detail, *args, **kwargs):
        """
        Exception to signal an unreadable run manifest.
        """
        message = "Cannot use manifest '{}': {}".format(path, detail)
        super().__init__(message, *args, **kwargs)


def manifest_path(out_path):
    """Path of the manifest accompanying the CSV file ``out_path``."""
    return "{}.manifest.json".format(out_path)


def manifest_to_json(manifest):
    """Stable JSON text of a RunManifest (sorted keys, trailing newline)."""
    return json.dumps(asdict(manifest), sort_keys=True, indent=2) + "\n"


def manifest_from_json(text, path="<string>"):
    """
    Parse a RunManifest.

    Args:
        text (str): JSON text as written by manifest_to_json.
        path (str): Source of the text, used in error messages.

    Returns:
        RunManifest: The manifest.

    Raises:
        ManifestError: On invalid JSON or missing fields.

    """
    try:
        data = json.loads(text)
    except ValueError as error:
        raise ManifestError(path, _("invalid JSON ({})").format(error))
    if not isinstance(data, dict):
        raise ManifestError(path, _("top level is not an object"))
    names = {field.name for field in fields(RunManifest)}
    required = {"tool_version", "command", "parameters", "seed", "timestamp"}
    missing = sorted(required - set(data))
    if missing:
        raise ManifestError(path, _("missing fields {}").format(", ".join(missing)))
    if not isinstance(data["parameters"], dict):
        raise ManifestError(path, _("parameters is not an object"))
    return RunManifest(**{name: value for name, value in data.items() if name in names})


def write_manifest(manifest, path):
    """Write a manifest file."""
    with open(path, "w", encoding="utf-8") as manifest_file:
        manifest_file.write(manifest_to_json(manifest))


def read_manifest(path):
    """Read a manifest file, raising ManifestError if it cannot be used."""
    try:
        with open(path, encoding="utf-8") as manifest_file:
            text = manifest_file.read()
    except OSError as error:
        raise ManifestError(path, error.strerror or str(error))
    return manifest_from_json(text, path)
