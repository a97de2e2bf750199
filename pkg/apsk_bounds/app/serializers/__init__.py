# flake8: noqa

from .csv_serializers import (
    BoundsRowSerializer,
    CoherentRowSerializer,
    ComparisonRowSerializer,
    ConstellationPointSerializer,
    CsvSerializer,
    OracleRowSerializer,
    SweepRowSerializer,
    format_number,
)

from .manifest_serializers import (
    ManifestError,
    manifest_from_json,
    manifest_path,
    manifest_to_json,
    read_manifest,
    write_manifest,
)
