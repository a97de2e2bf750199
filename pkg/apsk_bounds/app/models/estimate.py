import math

from dataclasses import dataclass


@dataclass(frozen=True)
class CapacityEstimate:
    """
    A Monte Carlo mean in bits with its standard error.
    """

    mean_bits: float
    std_error: float
    samples_used: int

    @classmethod
    def exact(cls, value, samples_used=0):
        """An estimate known without sampling error."""
        return cls(mean_bits=float(value), std_error=0.0, samples_used=samples_used)

    @classmethod
    def weighted_sum(cls, estimates, weights):
        """
        Linear combination of independent estimates.

        Args:
            estimates (list): CapacityEstimate instances.
            weights (list): One float per estimate.

        Returns:
            CapacityEstimate: sum(w * mean) with the errors added in quadrature.

        """
        mean = math.fsum(w * estimate.mean_bits for w, estimate in zip(weights, estimates))
        variance = math.fsum(
            (w * estimate.std_error) ** 2 for w, estimate in zip(weights, estimates)
        )
        samples = sum(estimate.samples_used for estimate in estimates)
        return cls(mean_bits=mean, std_error=math.sqrt(variance), samples_used=samples)

    def clamped(self, low, high):
        """Mean limited to [low, high], for reporting."""
        return min(max(self.mean_bits, low), high)


@dataclass(frozen=True)
class OracleEstimate(CapacityEstimate):
    """
    Brute force block AMI.

    ``mean_bits`` and ``std_error`` are per symbol (block value divided by L - 1), the
    block values are kept alongside.
    """

    block_len: int = 2
    block_bits: float = 0.0
    block_std_error: float = 0.0
