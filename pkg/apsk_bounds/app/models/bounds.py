import math

from dataclasses import dataclass, field, replace
from typing import Dict, Optional


@dataclass(frozen=True)
class BoundsRow:
    """
    Upper and lower bound on the noncoherent capacity at one (SNR, L) point.

    All values are in bits per symbol. Fields of a bound that was not computed are None.
    ``std_errors`` holds one entry per stored value, keyed like the attribute names
    ("coherent", "upper", "lower", "i_theta_r_discrete", ...).
    """

    snr_db: float
    block_len: int
    coherent_bits: float
    upper_bits: Optional[float] = None
    lower_bits: Optional[float] = None
    lower_raw_bits: Optional[float] = None
    term_i_theta_r_discrete: Optional[float] = None
    term_i_theta_r_continuous: Optional[float] = None
    term_i_theta_r_given_s_discrete: Optional[float] = None
    term_i_theta_r_given_s_continuous: Optional[float] = None
    std_errors: Dict[str, float] = field(default_factory=dict)
    block_term: str = "literal"
    oracle_bits: Optional[float] = None
    oracle_se: Optional[float] = None

    def merge(self, other):
        """
        Combine the upper fields of one row with the lower fields of another.

        Both rows must describe the same operating point. Values present in ``other``
        win.
        """
        if (self.snr_db, self.block_len) != (other.snr_db, other.block_len):
            raise ValueError("Cannot merge rows of different operating points.")
        updates = {
            name: getattr(other, name)
            for name in (
                "upper_bits",
                "lower_bits",
                "lower_raw_bits",
                "term_i_theta_r_discrete",
                "term_i_theta_r_continuous",
                "term_i_theta_r_given_s_discrete",
                "term_i_theta_r_given_s_continuous",
                "oracle_bits",
                "oracle_se",
            )
            if getattr(other, name) is not None
        }
        std_errors = dict(self.std_errors)
        std_errors.update(other.std_errors)
        return replace(self, std_errors=std_errors, **updates)

    def with_oracle(self, estimate):
        """Attach a brute force oracle estimate."""
        return replace(self, oracle_bits=estimate.mean_bits, oracle_se=estimate.std_error)

    @property
    def gap_bits(self):
        """upper - lower (raw), None unless both bounds are present."""
        if self.upper_bits is None or self.lower_raw_bits is None:
            return None
        return self.upper_bits - self.lower_raw_bits

    def combined_error(self, *names):
        """Standard errors of the named values added in quadrature."""
        return math.sqrt(math.fsum(self.std_errors[name] ** 2 for name in names))
