# coding=utf-8
"""Utilities for the apsk-bounds command line tests."""
import csv
import io
import json
import os
import shutil
import tempfile

from contextlib import redirect_stderr, redirect_stdout

from apsk_bounds.app.commands import main
from apsk_bounds.app.serializers import manifest_path


def run_cli(*argv):
    """
    Run the command line in process.

    Returns:
        tuple: (exit code, standard output, standard error)

    """
    stdout = io.StringIO()
    stderr = io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = main([str(arg) for arg in argv])
    return code, stdout.getvalue(), stderr.getvalue()


def read_csv(path):
    """Header and data rows of a CSV file."""
    with open(path, newline="", encoding="utf-8") as csv_file:
        rows = list(csv.reader(csv_file))
    return rows[0], rows[1:]


def read_bytes(path):
    """Raw content of a file."""
    with open(path, "rb") as output:
        return output.read()


def read_manifest_json(out_path):
    """The manifest written next to ``out_path`` as a dict."""
    with open(manifest_path(out_path), encoding="utf-8") as manifest_file:
        return json.load(manifest_file)


class OutputDirectoryMixin:
    """A temporary output directory per test."""

    def setUp(self):
        """Create the output directory."""
        self.directory = tempfile.mkdtemp(prefix="apsk-bounds-")

    def tearDown(self):
        """Remove the output directory."""
        shutil.rmtree(self.directory, ignore_errors=True)

    def out(self, name):
        """Path of an output file."""
        return os.path.join(self.directory, name)
