# flake8: noqa

from .bounds import BoundsRow

from .channel import ChannelParams, McConfig

from .constellation import (
    Constellation,
    ConstellationError,
    DegenerateConstellationError,
    build_apsk,
    psk_points,
    ring_subconstellation,
)

from .estimate import CapacityEstimate, OracleEstimate

from .manifest import RunManifest

from .oracle import BlockSample

from .stream import RandomStreamSpec

from .sweep import ComparisonRow, SweepResult, SweepRow, SweepSpec, SweepSpecError
