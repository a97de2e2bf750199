# coding=utf-8
"""Tests that the bounds reproduce the published behaviour at full sample counts.

These runs take minutes. They are skipped unless APSK_BOUNDS_RUN_SLOW is set.
"""
import os
import unittest

from apsk_bounds.app.constants import BLOCK_TERM_EXACT
from apsk_bounds.app.models import ChannelParams, McConfig, RandomStreamSpec, SweepSpec, build_apsk
from apsk_bounds.app.tasks import (
    bounds_curve,
    capacity_comparison,
    exact_block_ami,
    lower_bound,
    ring_ratio_sweep,
    upper_bound,
)

SLOW = unittest.skipUnless(os.environ.get("APSK_BOUNDS_RUN_SLOW"), "set APSK_BOUNDS_RUN_SLOW")

SAMPLES = 200000


def full_mc(seed=2024):
    """Monte Carlo configuration used by every claim."""
    return McConfig(samples=SAMPLES, stream=RandomStreamSpec(seed=seed), workers=4)


@SLOW
class SandwichTestCase(unittest.TestCase):
    """Test that the brute force block AMI lies between the two bounds at L = 2."""

    def test_8apsk(self):
        """Test exact lower <= oracle <= upper for 8-APSK(2,4), r = 2.42."""
        constellation = build_apsk(2, 4, 2.42)
        mc = full_mc()
        for snr_db in (0.0, 5.0, 10.0):
            channel = ChannelParams.from_snr_db(snr_db)
            upper = upper_bound(constellation, 2, channel, mc)
            lower = lower_bound(constellation, 2, channel, mc, block_term=BLOCK_TERM_EXACT)
            oracle = exact_block_ami(constellation, 2, channel, mc.child(99))
            with self.subTest(snr_db=snr_db):
                self.assertLessEqual(
                    lower.lower_raw_bits - 3 * lower.std_errors["lower"],
                    oracle.mean_bits + 3 * oracle.std_error,
                )
                self.assertLessEqual(
                    oracle.mean_bits - 3 * oracle.std_error,
                    upper.upper_bits + 3 * upper.std_errors["upper"],
                )


@SLOW
class GapTestCase(unittest.TestCase):
    """Test how close the bounds are."""

    def test_long_blocks(self):
        """Test upper - lower < 0.1 bit at L = 32 from 0 to 20 dB."""
        snrs = list(range(0, 21, 2))
        for constellation in (build_apsk(2, 4, 2.42), build_apsk(2, 8, 2.0)):
            for row in bounds_curve(constellation, [32], snrs, full_mc()):
                with self.subTest(constellation=constellation.label, snr_db=row.snr_db):
                    self.assertLess(
                        row.gap_bits, 0.1 + 3 * row.combined_error("upper", "lower")
                    )

    def test_short_blocks_low_snr(self):
        """Test that at L = 2 the bounds are close at low SNR."""
        cases = [
            (build_apsk(2, 4, 2.42), (-10.0, -5.0, 0.0), 0.05),
            (build_apsk(2, 8, 2.0), (0.0, 3.0, 6.0), 0.1),
        ]
        for constellation, snrs, limit in cases:
            for row in bounds_curve(constellation, [2], snrs, full_mc()):
                with self.subTest(constellation=constellation.label, snr_db=row.snr_db):
                    self.assertLess(
                        row.gap_bits, limit + 3 * row.combined_error("upper", "lower")
                    )

    def test_block_length_trend(self):
        """Test that the loss to coherent detection shrinks with L at 10 dB."""
        rows = bounds_curve(build_apsk(2, 4, 2.42), [2, 8, 16, 32], [10.0], full_mc())
        losses = [row.coherent_bits - row.lower_raw_bits for row in rows]
        for shorter, longer, row in zip(losses, losses[1:], rows[1:]):
            self.assertLess(longer, shorter + 3 * row.combined_error("coherent", "lower"))
        longest = rows[-1]
        self.assertLess(abs(longest.coherent_bits - longest.upper_bits), 0.05)
        self.assertLess(longest.coherent_bits - longest.lower_raw_bits, 0.1)


@SLOW
class RingRatioTestCase(unittest.TestCase):
    """Test the coherent ring ratio studies."""

    def test_argmax(self):
        """Test that the best ring ratio of 8-APSK(2,4) at 10 dB is near 2.42."""
        ratios = [round(1.2 + 0.05 * index, 10) for index in range(57)]
        spec = SweepSpec(
            n_rings=2, phases_per_ring=4, r_grid=ratios, snr_grid_db=[10.0], mc=full_mc()
        )
        result = ring_ratio_sweep(spec)
        self.assertAlmostEqual(result.argmax[10.0], 2.42, delta=0.3)

    def test_argmax_16apsk(self):
        """Test that the best ring ratio of 16-APSK(2,8) at 10 dB is near 2."""
        ratios = [round(1.2 + 0.1 * index, 10) for index in range(29)]
        spec = SweepSpec(
            n_rings=2, phases_per_ring=8, r_grid=ratios, snr_grid_db=[10.0], mc=full_mc()
        )
        result = ring_ratio_sweep(spec)
        self.assertAlmostEqual(result.argmax[10.0], 2.0, delta=0.3)

    def test_argmax_stable_over_snr(self):
        """Test that the best ring ratio of 8-APSK(2,4) moves at most one grid cell."""
        step = 0.1
        ratios = [round(1.2 + step * index, 10) for index in range(29)]
        snrs = [4.0, 8.0, 12.0, 16.0]
        spec = SweepSpec(
            n_rings=2, phases_per_ring=4, r_grid=ratios, snr_grid_db=snrs, mc=full_mc()
        )
        result = ring_ratio_sweep(spec)
        best = [result.argmax[snr_db] for snr_db in snrs]
        self.assertLessEqual(max(best) - min(best), step + 1e-9)

    def test_inner_ring_count(self):
        """Test that 16-APSK(2,8), r = 2 beats the best 16-APSK(4,4) from 8 to 14 dB."""
        snrs = [8.0, 10.0, 12.0, 14.0]
        mc = full_mc()
        ratios = [round(1.2 + 0.1 * index, 10) for index in range(19)]
        sweep = ring_ratio_sweep(
            SweepSpec(n_rings=4, phases_per_ring=4, r_grid=ratios, snr_grid_db=snrs, mc=mc)
        )
        rows = capacity_comparison([(2, 8, 2.0)], snrs, mc)
        for row in rows:
            best = max(
                (sweep_row for sweep_row in sweep.rows if sweep_row.snr_db == row.snr_db),
                key=lambda sweep_row: sweep_row.estimate.mean_bits,
            )
            error = (row.estimate.std_error ** 2 + best.estimate.std_error ** 2) ** 0.5
            with self.subTest(snr_db=row.snr_db):
                self.assertGreater(row.estimate.mean_bits - best.estimate.mean_bits, 3 * error)
