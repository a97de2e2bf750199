import math

from dataclasses import dataclass, field, replace
from gettext import gettext as _

from apsk_bounds.app import settings
from apsk_bounds.app.constants import NO_SAMPLES_MESSAGE
from apsk_bounds.app.models.stream import RandomStreamSpec


@dataclass(frozen=True)
class ChannelParams:
    """
    AWGN channel operating point.

    snr_db is E_s/N_0 in dB, n0 the one-sided noise spectral density and sigma_sq the
    variance of the real (and of the imaginary) part of the noise, N_0 / 2.
    """

    snr_db: float
    n0: float
    sigma_sq: float

    def __post_init__(self):
        """Check the noise parameters."""
        if not (math.isfinite(self.n0) and self.n0 > 0):
            raise ValueError(_("n0 must be finite and positive, got {}.").format(self.n0))
        if not math.isclose(self.sigma_sq, self.n0 / 2.0, rel_tol=1e-12):
            raise ValueError(
                _("sigma_sq must equal n0 / 2, got sigma_sq={} and n0={}.").format(
                    self.sigma_sq, self.n0
                )
            )

    @classmethod
    def from_snr_db(cls, snr_db, avg_energy=settings.DEFAULT_AVG_ENERGY):
        """
        Channel for a given E_s/N_0.

        Args:
            snr_db (float): E_s/N_0 in dB.
            avg_energy (float): E_s the SNR refers to.

        Returns:
            ChannelParams: The channel.

        """
        snr_db = float(snr_db)
        if not math.isfinite(snr_db):
            raise ValueError(_("snr_db must be finite, got {}.").format(snr_db))
        n0 = avg_energy / 10.0 ** (snr_db / 10.0)
        return cls(snr_db=snr_db, n0=n0, sigma_sq=n0 / 2.0)

    def with_block_gain(self, block_len):
        """
        The same channel with the SNR increased by a factor of ``block_len``.

        Amplitudes stay untouched, the noise variance is divided instead.
        """
        n0 = self.n0 / block_len
        return ChannelParams(
            snr_db=self.snr_db + 10.0 * math.log10(block_len), n0=n0, sigma_sq=n0 / 2.0
        )


@dataclass(frozen=True)
class McConfig:
    """
    How a Monte Carlo estimate is computed.

    The value of an estimate depends on ``samples`` and ``stream`` only. ``chunk_size``
    (samples per scheduled task) and ``workers`` (threads) change how fast it is computed.
    """

    samples: int
    stream: RandomStreamSpec = field(
        default_factory=lambda: RandomStreamSpec(seed=settings.DEFAULT_SEED)
    )
    chunk_size: int = settings.DEFAULT_CHUNK_SIZE
    workers: int = settings.DEFAULT_WORKERS

    def __post_init__(self):
        """Check the sample and scheduling parameters."""
        if isinstance(self.samples, bool) or int(self.samples) != self.samples:
            raise ValueError(_("samples must be an integer, got {!r}.").format(self.samples))
        if self.samples < 1:
            raise ValueError(_(NO_SAMPLES_MESSAGE))
        if self.chunk_size < 1:
            raise ValueError(_("chunk_size must be positive, got {}.").format(self.chunk_size))
        if self.workers < 1:
            raise ValueError(_("workers must be positive, got {}.").format(self.workers))

    def child(self, *keys):
        """The same configuration on a substream."""
        return replace(self, stream=self.stream.child(*keys))

    def serial(self):
        """The same configuration on a single worker."""
        return replace(self, workers=1)
