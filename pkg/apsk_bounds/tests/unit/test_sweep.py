import math
import unittest

from apsk_bounds.app.models import ChannelParams, McConfig, RandomStreamSpec, SweepSpec, build_apsk
from apsk_bounds.app.tasks import capacity_comparison, coherent_capacity, ring_ratio_sweep


class TestRingRatioSweep(unittest.TestCase):
    """Test ring_ratio_sweep."""

    def setUp(self):
        """Set up a small 8-APSK(2,4) sweep."""
        self.mc = McConfig(samples=4096, stream=RandomStreamSpec(seed=31))
        self.spec = SweepSpec(2, 4, [1.0, 1.5, 2.42, 3.5], [5.0, 20.0], self.mc)

    def test_rows(self):
        """Test the row layout and the argmax flags."""
        result = ring_ratio_sweep(self.spec)
        self.assertEqual(len(result.rows), 8)
        self.assertEqual([row.snr_db for row in result.rows], [5.0] * 4 + [20.0] * 4)
        for snr_db in (5.0, 20.0):
            rows = [row for row in result.rows if row.snr_db == snr_db]
            flagged = [row for row in rows if row.is_argmax]
            self.assertEqual(len(flagged), 1)
            best = max(rows, key=lambda row: row.estimate.mean_bits)
            self.assertIs(flagged[0], best)
            self.assertEqual(result.argmax[snr_db], best.ring_ratio)
            first, last = result.tie_intervals[snr_db]
            self.assertLessEqual(first, best.ring_ratio)
            self.assertGreaterEqual(last, best.ring_ratio)

    def test_degenerate_ratio(self):
        """Test that coincident rings carry at most log2 P bits."""
        result = ring_ratio_sweep(self.spec)
        for row in result.rows:
            if row.ring_ratio == 1.0:
                self.assertLessEqual(row.estimate.mean_bits, 2.0 + 3 * row.estimate.std_error)

    def test_common_random_numbers(self):
        """Test that every ratio of one SNR runs on the stream of that SNR."""
        result = ring_ratio_sweep(self.spec)
        row = result.rows[6]
        expected = coherent_capacity(
            build_apsk(2, 4, row.ring_ratio), ChannelParams.from_snr_db(20.0), self.mc.child(1)
        )
        self.assertEqual(row.estimate, expected)

    def test_independent_streams(self):
        """Test that disabling common random numbers changes the streams."""
        spec = SweepSpec(2, 4, [1.5, 2.42], [5.0], self.mc, common_random_numbers=False)
        result = ring_ratio_sweep(spec)
        expected = coherent_capacity(
            build_apsk(2, 4, 2.42), ChannelParams.from_snr_db(5.0), self.mc.child(0, 1)
        )
        self.assertEqual(result.rows[1].estimate, expected)

    def test_grows_with_snr(self):
        """Test that the capacity at a fixed ring ratio does not decrease with the SNR."""
        spec = SweepSpec(2, 4, [2.42], [0.0, 5.0, 10.0, 15.0, 20.0], self.mc)
        rows = ring_ratio_sweep(spec).rows
        for lower, higher in zip(rows, rows[1:]):
            error = math.hypot(lower.estimate.std_error, higher.estimate.std_error)
            self.assertGreaterEqual(higher.estimate.mean_bits, lower.estimate.mean_bits - 3 * error)

    def test_workers(self):
        """Test identical results for any number of workers."""
        mc = McConfig(samples=4096, stream=self.mc.stream, workers=4)
        threaded = SweepSpec(2, 4, self.spec.r_grid, self.spec.snr_grid_db, mc)
        self.assertEqual(ring_ratio_sweep(self.spec), ring_ratio_sweep(threaded))

    def test_logging(self):
        """Test that the sweep logs its start and the best ratio per SNR at INFO."""
        with self.assertLogs("apsk_bounds.app.tasks.sweep", level="INFO") as logs:
            result = ring_ratio_sweep(self.spec)
        self.assertEqual(len(logs.records), 2)
        self.assertIn("Ring ratio sweep: APSK(2,4)", logs.output[0])
        self.assertIn("Ring ratio sweep done", logs.output[1])
        self.assertIn("20 dB: {:g}".format(result.argmax[20.0]), logs.output[1])


class TestCapacityComparison(unittest.TestCase):
    """Test capacity_comparison."""

    def setUp(self):
        """Set up the Monte Carlo configuration."""
        self.mc = McConfig(samples=8192, stream=RandomStreamSpec(seed=12))

    def test_duplicates(self):
        """Test that duplicate constellations give identical rows."""
        rows = capacity_comparison([(2, 4, 2.42), (2, 4, 2.42)], [5.0, 10.0], self.mc)
        self.assertEqual(len(rows), 4)
        self.assertEqual(rows[0].estimate, rows[2].estimate)
        self.assertEqual(rows[1].estimate, rows[3].estimate)

    def test_order_and_labels(self):
        """Test constellation-major order and the row labels."""
        rows = capacity_comparison([(2, 8, 2.0), (4, 4, 1.5)], [0.0, 3.0], self.mc)
        self.assertEqual(
            [(row.label, row.snr_db) for row in rows],
            [
                ("16-APSK(2,8)", 0.0),
                ("16-APSK(2,8)", 3.0),
                ("16-APSK(4,4)", 0.0),
                ("16-APSK(4,4)", 3.0),
            ],
        )
        self.assertEqual(rows[2].ring_ratio, 1.5)

    def test_saturation(self):
        """Test that every constellation reaches log2 M at 30 dB."""
        rows = capacity_comparison([(2, 4, 2.42), (2, 8, 2.0)], [30.0], self.mc)
        for row in rows:
            size = row.n_rings * row.phases_per_ring
            self.assertLess(abs(row.estimate.mean_bits - math.log2(size)), 0.02)

    def test_invalid(self):
        """Test that empty inputs raise ValueError."""
        with self.assertRaises(ValueError):
            capacity_comparison([], [0.0], self.mc)

    def test_logging(self):
        """Test that the comparison logs its start and completion at INFO."""
        with self.assertLogs("apsk_bounds.app.tasks.sweep", level="INFO") as logs:
            capacity_comparison([(2, 4, 2.42)], [5.0, 10.0], self.mc)
        self.assertEqual(len(logs.records), 2)
        self.assertIn("Capacity comparison: 8-APSK(2,4) at 2 SNR points", logs.output[0])
        self.assertIn("Capacity comparison done: 2 rows", logs.output[1])
        with self.assertRaises(ValueError):
            capacity_comparison([(2, 4, 2.42)], [], self.mc)
