import csv
import logging
import math

from gettext import gettext as _

from apsk_bounds.app import settings
from apsk_bounds.app.constants import (
    BOUNDS_COLUMNS,
    COHERENT_COLUMNS,
    COMPARISON_COLUMNS,
    CONSTELLATION_COLUMNS,
    ORACLE_COLUMNS,
    SWEEP_COLUMNS,
)


log = logging.getLogger(__name__)

NUMBER_FORMAT = "%.{}g".format(settings.CSV_SIGNIFICANT_DIGITS)


def format_number(value):
    """
    Render one CSV cell.

    None becomes an empty cell, booleans 1/0, integers are written as they are and floats
    with CSV_SIGNIFICANT_DIGITS significant digits. The result never depends on the locale.
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        # -0.0 + 0.0 is 0.0
        return NUMBER_FORMAT % (value + 0.0)
    return str(value)


def _clamp_bits(value, size):
    return min(max(value, 0.0), math.log2(size))


class CsvSerializer:
    """
    Base class of the CSV row serializers.

    Subclasses set ``columns`` and implement ``to_representation`` returning one value per
    column for an item.
    """

    columns = ()

    def to_representation(self, item):
        """Values of one row, in column order."""
        raise NotImplementedError

    def to_rows(self, items):
        """Formatted rows, header first."""
        rows = [list(self.columns)]
        for item in items:
            values = self.to_representation(item)
            if len(values) != len(self.columns):
                raise ValueError(
                    _("{} produced {} values for {} columns.").format(
                        type(self).__name__, len(values), len(self.columns)
                    )
                )
            rows.append([format_number(value) for value in values])
        return rows

    def write(self, items, path):
        """
        Write a CSV file.

        Args:
            items (list): Items to serialize.
            path (str): Output path.

        Returns:
            int: Number of data rows written.

        """
        rows = self.to_rows(items)
        with open(path, "w", newline="", encoding="utf-8") as csv_file:
            writer = csv.writer(csv_file, lineterminator="\r\n")
            writer.writerows(rows)
        log.info(_("Wrote {} rows to {}").format(len(rows) - 1, path))
        return len(rows) - 1


class BoundsRowSerializer(CsvSerializer):
    """
    A serializer for BoundsRow.

    coherent_bits is clamped to [0, log2 M]; every other value is written as estimated.
    """

    columns = BOUNDS_COLUMNS

    def __init__(self, constellation_size):
        """Remember M for the clamp."""
        self.constellation_size = constellation_size

    def to_representation(self, row):
        """Values of one BoundsRow."""
        errors = row.std_errors
        return (
            row.snr_db,
            row.block_len,
            _clamp_bits(row.coherent_bits, self.constellation_size),
            errors.get("coherent"),
            row.upper_bits,
            errors.get("upper"),
            row.lower_bits,
            row.lower_raw_bits,
            errors.get("lower"),
            row.term_i_theta_r_discrete,
            row.term_i_theta_r_continuous,
            row.term_i_theta_r_given_s_discrete,
            row.term_i_theta_r_given_s_continuous,
            row.oracle_bits,
            row.oracle_se,
        )


class CoherentRowSerializer(CsvSerializer):
    """
    A serializer for (snr_db, CapacityEstimate) pairs.
    """

    columns = COHERENT_COLUMNS

    def __init__(self, constellation_size):
        """Remember M for the clamp."""
        self.constellation_size = constellation_size

    def to_representation(self, item):
        """Values of one SNR point."""
        snr_db, estimate = item
        return (
            snr_db,
            estimate.clamped(0.0, math.log2(self.constellation_size)),
            estimate.std_error,
        )


class SweepRowSerializer(CsvSerializer):
    """
    A serializer for SweepRow.
    """

    columns = SWEEP_COLUMNS

    def __init__(self, constellation_size):
        """Remember M for the clamp."""
        self.constellation_size = constellation_size

    def to_representation(self, row):
        """Values of one sweep cell."""
        return (
            row.snr_db,
            row.ring_ratio,
            row.estimate.clamped(0.0, math.log2(self.constellation_size)),
            row.estimate.std_error,
            row.is_argmax,
        )


class ComparisonRowSerializer(CsvSerializer):
    """
    A serializer for ComparisonRow items, labelled like "16-APSK(2,8) r=2".
    """

    columns = COMPARISON_COLUMNS

    def to_representation(self, row):
        """Values of one comparison cell."""
        size = row.n_rings * row.phases_per_ring
        return (
            "{} r={:g}".format(row.label, row.ring_ratio),
            row.snr_db,
            row.estimate.clamped(0.0, math.log2(size)),
            row.estimate.std_error,
        )


class OracleRowSerializer(CsvSerializer):
    """
    A serializer for (snr_db, OracleEstimate) pairs; values are per symbol.
    """

    columns = ORACLE_COLUMNS

    def to_representation(self, item):
        """Values of one SNR point."""
        snr_db, estimate = item
        return (snr_db, estimate.block_len, estimate.mean_bits, estimate.std_error)


class ConstellationPointSerializer(CsvSerializer):
    """
    A serializer for the points of a Constellation, one row per point.
    """

    columns = CONSTELLATION_COLUMNS

    def to_rows(self, constellation):
        """Formatted point rows, header first."""
        phases = constellation.phases_per_ring
        items = [
            (index, index // phases, index % phases, complex(point))
            for index, point in enumerate(constellation.points)
        ]
        return super().to_rows(items)

    def to_representation(self, item):
        """Values of one point."""
        index, ring, phase_index, point = item
        return (
            index,
            ring,
            phase_index,
            point.real,
            point.imag,
            abs(point),
            math.atan2(point.imag, point.real),
        )
