import logging
import math

from dataclasses import dataclass
from gettext import gettext as _
from typing import Tuple

import numpy as np

from apsk_bounds.app import settings


log = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


class ConstellationError(ValueError):
    """
    Exception to signal invalid constellation parameters.
    """

    def __init__(self, detail, *args, **kwargs):
        """
        Exception to signal invalid constellation parameters.
        """
        super().__init__("Invalid constellation: {}".format(detail), *args, **kwargs)


class DegenerateConstellationError(ConstellationError):
    """
    Exception to signal that rings would coincide (ring ratio 1).
    """

    def __init__(self, n_rings, *args, **kwargs):
        """
        Exception to signal that rings would coincide (ring ratio 1).
        """
        super().__init__(
            _(
                "ring_ratio = 1 puts all {} rings on top of each other. "
                "Pass allow_degenerate=True to build it anyway."
            ).format(n_rings),
            *args,
            **kwargs
        )


@dataclass(frozen=True, eq=False)
class Constellation:
    """
    An M-APSK(N,P) signal set.

    N rings with amplitudes ``base_amplitude * ring_ratio**k`` carry P equally spaced phases
    each. Points are stored ring-major: point ``k * P + p`` sits on ring k at phase
    ``2 pi p / P + ring_phase_offsets[k]``.
    """

    n_rings: int
    phases_per_ring: int
    ring_ratio: float
    base_amplitude: float
    ring_phase_offsets: Tuple[float, ...]
    points: np.ndarray
    avg_energy: float

    def __post_init__(self):
        """Freeze the point array and check that the fields agree with each other."""
        points = np.array(self.points, dtype=complex)
        points.setflags(write=False)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "ring_phase_offsets", tuple(self.ring_phase_offsets))
        if points.shape != (self.n_rings * self.phases_per_ring,):
            raise ConstellationError(
                _("expected {} points, got {}").format(
                    self.n_rings * self.phases_per_ring, points.shape
                )
            )
        if len(self.ring_phase_offsets) != self.n_rings:
            raise ConstellationError(_("need one phase offset per ring"))

    @property
    def size(self):
        """M = N * P."""
        return self.n_rings * self.phases_per_ring

    @property
    def label(self):
        """Human readable name, i.e. "8-APSK(2,4)"."""
        return "{}-APSK({},{})".format(self.size, self.n_rings, self.phases_per_ring)

    @property
    def ring_amplitudes(self):
        """Amplitude of every ring, innermost first."""
        return self.base_amplitude * self.ring_ratio ** np.arange(self.n_rings, dtype=float)

    def min_distance(self):
        """Smallest Euclidean distance between two points (0 for coincident points)."""
        if self.size < 2:
            return math.inf
        distances = np.abs(self.points[:, None] - self.points[None, :])
        return float(distances[np.triu_indices(self.size, k=1)].min())

    def peak_to_average_power(self):
        """Ratio of the largest point energy to the average energy."""
        return float(np.max(np.abs(self.points) ** 2) / self.avg_energy)

    def __repr__(self):
        """Short description with the label and the scale."""
        return "<Constellation: {} r={:g} A={:g} Es={:g}>".format(
            self.label, self.ring_ratio, self.base_amplitude, self.avg_energy
        )


def _positive_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < minimum:
        raise ConstellationError(
            _("{} must be an integer >= {}, got {!r}").format(name, minimum, value)
        )
    return int(value)


def _positive_real(name, value):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ConstellationError(_("{} must be a real number, got {!r}").format(name, value))
    if not math.isfinite(value) or value <= 0:
        raise ConstellationError(_("{} must be finite and positive, got {}").format(name, value))
    return value


def psk_points(phases, amplitude, offset=0.0):
    """
    Points of a P-PSK constellation.

    Args:
        phases (int): Number of phases P.
        amplitude (float): Common amplitude of all points.
        offset (float): Phase of point 0.

    Returns:
        numpy.ndarray: The P complex points.

    """
    return amplitude * np.exp(1j * (TWO_PI * np.arange(phases) / phases + offset))


def build_apsk(
    n_rings,
    phases_per_ring,
    ring_ratio,
    avg_energy=settings.DEFAULT_AVG_ENERGY,
    ring_phase_offsets=None,
    allow_degenerate=False,
):
    """
    Build an M-APSK(N,P) constellation with geometric ring spacing.

    The base amplitude is chosen so that the mean point energy equals ``avg_energy``:
    ``A = sqrt(avg_energy * N / sum_k r**(2k))``.

    Args:
        n_rings (int): Number of rings N, at least 1.
        phases_per_ring (int): Number of phases P per ring, at least 2.
        ring_ratio (float): Amplitude ratio r between neighbouring rings.
        avg_energy (float): Average symbol energy E_s.
        ring_phase_offsets (list): Phase offset of every ring in radians, default all 0.
        allow_degenerate (bool): Accept ring_ratio = 1 with more than one ring.

    Returns:
        Constellation: The signal set.

    Raises:
        ConstellationError: On invalid parameters.
        DegenerateConstellationError: On ring_ratio = 1 unless explicitly allowed.

    """
    n_rings = _positive_int("n_rings", n_rings, 1)
    phases_per_ring = _positive_int("phases_per_ring", phases_per_ring, 2)
    ring_ratio = _positive_real("ring_ratio", ring_ratio)
    avg_energy = _positive_real("avg_energy", avg_energy)

    if ring_phase_offsets is None:
        ring_phase_offsets = (0.0,) * n_rings
    ring_phase_offsets = tuple(float(offset) for offset in ring_phase_offsets)
    if len(ring_phase_offsets) != n_rings:
        raise ConstellationError(
            _("need {} ring phase offsets, got {}").format(n_rings, len(ring_phase_offsets))
        )
    if not all(math.isfinite(offset) for offset in ring_phase_offsets):
        raise ConstellationError(_("ring phase offsets must be finite"))
    ring_phase_offsets = tuple(offset % TWO_PI for offset in ring_phase_offsets)

    if n_rings > 1 and ring_ratio == 1.0:
        if not allow_degenerate:
            raise DegenerateConstellationError(n_rings)
        log.warning(
            _("Building {}-APSK({},{}) with ring_ratio = 1: rings coincide.").format(
                n_rings * phases_per_ring, n_rings, phases_per_ring
            )
        )

    ring_powers = ring_ratio ** (2.0 * np.arange(n_rings))
    base_amplitude = math.sqrt(avg_energy * n_rings / ring_powers.sum())
    amplitudes = base_amplitude * ring_ratio ** np.arange(n_rings, dtype=float)
    points = np.concatenate(
        [
            psk_points(phases_per_ring, amplitude, offset)
            for amplitude, offset in zip(amplitudes, ring_phase_offsets)
        ]
    )

    constellation = Constellation(
        n_rings=n_rings,
        phases_per_ring=phases_per_ring,
        ring_ratio=ring_ratio,
        base_amplitude=base_amplitude,
        ring_phase_offsets=ring_phase_offsets,
        points=points,
        avg_energy=avg_energy,
    )
    log.debug(_("Built {!r}").format(constellation))
    return constellation


def ring_subconstellation(constellation, ring_index):
    """
    Single ring of a constellation as a P-PSK constellation of its own.

    Args:
        constellation (Constellation): The APSK constellation.
        ring_index (int): Which ring, 0 being the innermost.

    Returns:
        Constellation: N = 1, P points at the ring amplitude, avg_energy = amplitude**2.

    Raises:
        ConstellationError: If ring_index is out of range.

    """
    if (
        isinstance(ring_index, bool)
        or not isinstance(ring_index, (int, np.integer))
        or not 0 <= ring_index < constellation.n_rings
    ):
        raise ConstellationError(
            _("ring_index must be in [0, {}), got {!r}").format(
                constellation.n_rings, ring_index
            )
        )
    if constellation.n_rings == 1:
        return constellation
    amplitude = float(constellation.ring_amplitudes[ring_index])
    offset = constellation.ring_phase_offsets[ring_index]
    return Constellation(
        n_rings=1,
        phases_per_ring=constellation.phases_per_ring,
        ring_ratio=1.0,
        base_amplitude=amplitude,
        ring_phase_offsets=(offset,),
        points=psk_points(constellation.phases_per_ring, amplitude, offset),
        avg_energy=amplitude ** 2,
    )
