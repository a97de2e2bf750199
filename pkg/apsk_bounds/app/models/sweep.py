from dataclasses import dataclass, field
from gettext import gettext as _
from typing import Dict, List, Tuple

from apsk_bounds.app.models.channel import McConfig
from apsk_bounds.app.models.estimate import CapacityEstimate


class SweepSpecError(ValueError):
    """
    Exception to signal an unusable sweep grid.
    """

    def __init__(self, detail, *args, **kwargs):
        """
        Exception to signal an unusable sweep grid.
        """
        super().__init__("Invalid sweep: {}".format(detail), *args, **kwargs)


@dataclass(frozen=True)
class SweepSpec:
    """
    A ring ratio x SNR grid for one APSK(N,P) family.

    With ``common_random_numbers`` all ring ratios of one SNR share a stream, which makes
    differences between neighbouring ratios far more precise than the estimates themselves.
    """

    n_rings: int
    phases_per_ring: int
    r_grid: Tuple[float, ...]
    snr_grid_db: Tuple[float, ...]
    mc: McConfig
    common_random_numbers: bool = True

    def __post_init__(self):
        """Check the grids."""
        object.__setattr__(self, "r_grid", tuple(float(r) for r in self.r_grid))
        object.__setattr__(self, "snr_grid_db", tuple(float(s) for s in self.snr_grid_db))
        if not self.r_grid:
            raise SweepSpecError(_("the ring ratio grid is empty"))
        if not self.snr_grid_db:
            raise SweepSpecError(_("the SNR grid is empty"))
        if any(r <= 0 for r in self.r_grid):
            raise SweepSpecError(_("ring ratios must be positive"))
        if any(b <= a for a, b in zip(self.r_grid, self.r_grid[1:])):
            raise SweepSpecError(_("ring ratios must be distinct and sorted ascending"))


@dataclass(frozen=True)
class SweepRow:
    """One (SNR, ring ratio) cell of a sweep."""

    snr_db: float
    ring_ratio: float
    estimate: CapacityEstimate
    is_argmax: bool = False


@dataclass(frozen=True)
class SweepResult:
    """
    Outcome of a ring ratio sweep.

    ``argmax`` maps every SNR to the ring ratio with the largest estimate,
    ``tie_intervals`` to the (smallest, largest) ratio that cannot be told apart from it.
    """

    rows: List[SweepRow]
    argmax: Dict[float, float]
    tie_intervals: Dict[float, Tuple[float, float]] = field(default_factory=dict)


@dataclass(frozen=True)
class ComparisonRow:
    """Coherent capacity of one constellation at one SNR."""

    label: str
    n_rings: int
    phases_per_ring: int
    ring_ratio: float
    snr_db: float
    estimate: CapacityEstimate
