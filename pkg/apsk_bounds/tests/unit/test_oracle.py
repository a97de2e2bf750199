import math
import unittest

import numpy as np
from scipy.special import logsumexp

from apsk_bounds.app.models import (
    ChannelParams,
    Constellation,
    McConfig,
    RandomStreamSpec,
    build_apsk,
)
from apsk_bounds.app.tasks import (
    BlockLengthError,
    OracleBudgetError,
    check_oracle_budget,
    coherent_capacity,
    draw_block_samples,
    exact_block_ami,
    log_likelihood_block,
    log_likelihood_block_quadrature,
)


class TestLogLikelihoodBlock(unittest.TestCase):
    """Test log_likelihood_block and its quadrature counterpart."""

    def setUp(self):
        """Set up a random generator."""
        self.generator = RandomStreamSpec(seed=77).generator()

    def test_zero_input(self):
        """Test that s = 0 gives the complex Gaussian log density of r."""
        r = np.array([0.3 + 0.1j, -1.0 + 0.5j, 0.2j])
        value = log_likelihood_block(r, np.zeros(3), 0.5)
        expected = -3 * math.log(math.pi) - np.sum(np.abs(r) ** 2)
        self.assertAlmostEqual(value, expected, places=12)

    def test_single_symbol(self):
        """Test r = s, sigma^2 = 0.5, L = 1 against direct substitution."""
        value = log_likelihood_block([1.0], [1.0], 0.5)
        expected = -math.log(math.pi) - 2.0 + math.log(2.2795853023360673)
        self.assertAlmostEqual(value, expected, places=12)

    def test_rotation_invariance(self):
        """Test that rotating the received block leaves the value unchanged."""
        r = self.generator.standard_normal(4) + 1j * self.generator.standard_normal(4)
        s = build_apsk(2, 4, 2.42).points[[0, 5, 2, 7]]
        reference = log_likelihood_block(r, s, 0.3)
        for psi in (0.4, 2.0, -3.0):
            rotated = log_likelihood_block(r * np.exp(1j * psi), s, 0.3)
            self.assertAlmostEqual(rotated, reference, places=10)

    def test_broadcasting(self):
        """Test one value per block for stacked received blocks."""
        r = np.ones((5, 3), dtype=complex)
        values = log_likelihood_block(r, np.ones(3), 1.0)
        self.assertEqual(values.shape, (5,))

    def test_quadrature_agrees(self):
        """Test the closed form against the numerical phase marginal on random instances."""
        for _ in range(100):
            block_len = int(self.generator.integers(1, 5))
            r = self.generator.standard_normal(block_len) + 1j * self.generator.standard_normal(
                block_len
            )
            s = self.generator.standard_normal(block_len) + 1j * self.generator.standard_normal(
                block_len
            )
            sigma_sq = float(self.generator.uniform(0.2, 2.0))
            closed = log_likelihood_block(r, s, sigma_sq)
            numerical = log_likelihood_block_quadrature(r, s, sigma_sq)
            self.assertLess(abs(closed - numerical), 1e-6)

    def test_invalid(self):
        """Test that mismatched blocks and bad variances raise ValueError."""
        with self.assertRaises(ValueError):
            log_likelihood_block([1.0, 2.0], [1.0], 1.0)
        with self.assertRaises(ValueError):
            log_likelihood_block([1.0], [1.0], 0.0)


class TestDrawBlockSamples(unittest.TestCase):
    """Test draw_block_samples."""

    def test_shapes(self):
        """Test the batch layout and the channel relation."""
        constellation = build_apsk(2, 4, 2.42)
        channel = ChannelParams.from_snr_db(10.0)
        sample = draw_block_samples(
            constellation, 3, channel, RandomStreamSpec(seed=3).generator(), 50
        )
        self.assertEqual((sample.count, sample.block_len), (50, 3))
        np.testing.assert_array_equal(sample.s, constellation.points[sample.indices])
        np.testing.assert_allclose(
            sample.received, sample.s * np.exp(1j * sample.theta)[:, None] + sample.noise
        )


class TestExactBlockAmi(unittest.TestCase):
    """Test exact_block_ami."""

    def setUp(self):
        """Set up 8-APSK(2,4)."""
        self.constellation = build_apsk(2, 4, 2.42)
        self.mc = McConfig(samples=8192, stream=RandomStreamSpec(seed=21))

    def test_single_point(self):
        """Test that a one point alphabet carries no information."""
        single = Constellation(
            n_rings=1,
            phases_per_ring=1,
            ring_ratio=1.0,
            base_amplitude=1.0,
            ring_phase_offsets=(0.0,),
            points=[1.0 + 0.0j],
            avg_energy=1.0,
        )
        estimate = exact_block_ami(single, 3, ChannelParams.from_snr_db(5.0), self.mc)
        self.assertEqual(estimate.mean_bits, 0.0)

    def test_vanishing_snr(self):
        """Test that the block AMI vanishes at -30 dB."""
        estimate = exact_block_ami(self.constellation, 2, ChannelParams.from_snr_db(-30.0), self.mc)
        self.assertLess(abs(estimate.mean_bits), 3 * estimate.std_error + 1e-3)

    def test_normalization(self):
        """Test that the per-symbol value is the block value divided by L - 1."""
        estimate = exact_block_ami(
            self.constellation, 3, ChannelParams.from_snr_db(5.0), McConfig(samples=512)
        )
        self.assertEqual(estimate.block_len, 3)
        self.assertAlmostEqual(estimate.mean_bits, estimate.block_bits / 2)
        self.assertAlmostEqual(estimate.std_error, estimate.block_std_error / 2)

    def test_below_coherent(self):
        """Test that the noncoherent per-symbol AMI does not exceed the coherent capacity."""
        channel = ChannelParams.from_snr_db(5.0)
        oracle = exact_block_ami(self.constellation, 2, channel, self.mc)
        coherent = coherent_capacity(self.constellation, channel, self.mc.child(1))
        error = math.hypot(oracle.std_error, coherent.std_error)
        self.assertLess(oracle.mean_bits, coherent.mean_bits + 3 * error)
        self.assertGreater(oracle.mean_bits, 0.5)

    def test_matches_block_likelihood(self):
        """Test the estimate against log_likelihood_block evaluated block by block."""
        channel = ChannelParams.from_snr_db(5.0)
        mc = McConfig(samples=64, stream=RandomStreamSpec(seed=5))
        estimate = exact_block_ami(self.constellation, 2, channel, mc)
        sample = draw_block_samples(
            self.constellation, 2, channel, mc.stream.child(0).generator(), 64
        )
        points = self.constellation.points
        values = []
        for received, sent, indices in zip(sample.received, sample.s, sample.indices):
            blocks = np.stack([np.full(points.shape, sent[0]), points], axis=1)
            log_likelihood = log_likelihood_block(received, blocks, channel.sigma_sq)
            marginal = logsumexp(log_likelihood) - math.log(points.shape[0])
            values.append((log_likelihood[indices[1]] - marginal) / math.log(2.0))
        self.assertAlmostEqual(estimate.mean_bits, np.mean(values), places=9)

    def test_global_rotation(self):
        """Test that rotating the whole constellation leaves the block AMI unchanged."""
        delta = 0.7
        rotated = build_apsk(2, 4, 2.42, ring_phase_offsets=(delta, delta))
        channel = ChannelParams.from_snr_db(5.0)
        plain = exact_block_ami(self.constellation, 2, channel, self.mc)
        turned = exact_block_ami(rotated, 2, channel, self.mc.child(1))
        error = math.hypot(plain.std_error, turned.std_error)
        self.assertLess(abs(plain.mean_bits - turned.mean_bits), 3 * error)

    def test_quadrature_path(self):
        """Test that the numerical phase marginal reproduces the closed form estimate."""
        channel = ChannelParams.from_snr_db(5.0)
        mc = McConfig(samples=256)
        closed = exact_block_ami(self.constellation, 2, channel, mc)
        numerical = exact_block_ami(self.constellation, 2, channel, mc, likelihood="quadrature")
        self.assertAlmostEqual(closed.mean_bits, numerical.mean_bits, delta=1e-6)

    def test_free_reference(self):
        """Test the unreferenced study mode at vanishing SNR."""
        estimate = exact_block_ami(
            self.constellation,
            2,
            ChannelParams.from_snr_db(-30.0),
            McConfig(samples=4096),
            known_reference=False,
        )
        self.assertLess(abs(estimate.mean_bits), 3 * estimate.std_error + 1e-3)

    def test_budget(self):
        """Test that M^L beyond the budget raises OracleBudgetError with M^L in the message."""
        apsk16 = build_apsk(2, 8, 2.0)
        check_oracle_budget(apsk16, 4)
        with self.assertRaises(OracleBudgetError) as context:
            exact_block_ami(apsk16, 5, ChannelParams.from_snr_db(0.0), self.mc)
        self.assertIn("1048576", str(context.exception))
        self.assertEqual(context.exception.enumeration, 16 ** 5)
        with self.assertRaises(OracleBudgetError):
            check_oracle_budget(self.constellation, 2, budget=63)

    def test_invalid(self):
        """Test that L = 1 and unknown likelihoods are rejected."""
        channel = ChannelParams.from_snr_db(0.0)
        with self.assertRaises(BlockLengthError):
            exact_block_ami(self.constellation, 1, channel, self.mc)
        with self.assertRaises(ValueError):
            exact_block_ami(self.constellation, 2, channel, self.mc, likelihood="sampled")

    def test_logging(self):
        """Test that the oracle logs its start and its per-symbol result at INFO."""
        with self.assertLogs("apsk_bounds.app.tasks.oracle", level="INFO") as logs:
            channel = ChannelParams.from_snr_db(5.0)
            estimate = exact_block_ami(self.constellation, 2, channel, self.mc)
        self.assertEqual(len(logs.records), 2)
        self.assertIn("Oracle: 8-APSK(2,4) L=2 at 5 dB", logs.output[0])
        self.assertIn("{:.4f}".format(estimate.mean_bits), logs.output[1])
