import unittest

import numpy as np

from bergman_spaces.core.errors import NumericError, ParameterError
from bergman_spaces.quadrature.divergence import (
    CONVERGENT,
    GROWTH_TOLERANCE,
    LOG_DIVERGENT,
    POWER_DIVERGENT,
    classify_growth,
    halving_cutoffs,
)


class TestClassifyGrowth(unittest.TestCase):
    """Test growth classification of truncation sequences"""

    def setUp(self):
        self.eps = np.array(halving_cutoffs(3, 16))

    def test_cutoffs(self):
        """Halving cutoffs run from 2^-first to 2^-last"""
        self.assertEqual(len(self.eps), 14)
        self.assertEqual(self.eps[0], 0.125)
        self.assertEqual(self.eps[-1], 2.0 ** -16)
        with self.assertRaises(ParameterError):
            halving_cutoffs(5, 5)

    def test_convergent(self):
        """V = 1 - eps converges"""
        fit = classify_growth(self.eps, 1.0 - self.eps)
        self.assertEqual(fit.classification, CONVERGENT)
        self.assertFalse(fit.diverged)
        self.assertAlmostEqual(fit.increment_slope, -1.0, places=6)

    def test_log(self):
        """V = 2 ln(1/eps) is log-divergent with log slope 2"""
        fit = classify_growth(self.eps, 2.0 * np.log(1.0 / self.eps))
        self.assertEqual(fit.classification, LOG_DIVERGENT)
        self.assertAlmostEqual(fit.log_slope, 2.0, places=6)

    def test_power(self):
        """V = eps^-1/2 is power-divergent"""
        fit = classify_growth(self.eps, self.eps ** -0.5)
        self.assertEqual(fit.classification, POWER_DIVERGENT)
        self.assertAlmostEqual(fit.increment_slope, 0.5, places=6)
        self.assertTrue(fit.diverged)

    def test_order_does_not_matter(self):
        """Cutoffs may be given in any order"""
        forward = classify_growth(self.eps, self.eps ** -0.5)
        backward = classify_growth(self.eps[::-1], (self.eps ** -0.5)[::-1])
        self.assertEqual(forward, backward)

    def test_band_around_critical_exponent(self):
        """Increments eps^kappa with |kappa| inside the tolerance read as log-divergent"""
        near = classify_growth(self.eps, 1.0 - self.eps ** 0.1)
        self.assertAlmostEqual(near.increment_slope, -0.1, places=6)
        self.assertLess(0.1, GROWTH_TOLERANCE)
        self.assertEqual(near.classification, LOG_DIVERGENT)
        self.assertEqual(classify_growth(self.eps, 1.0 - self.eps ** 0.3).classification, CONVERGENT)
        self.assertEqual(classify_growth(self.eps, 1.0 - self.eps ** 0.1, tolerance=0.05).classification, CONVERGENT)

    def test_non_finite(self):
        """NaN or infinite truncations are rejected rather than classified"""
        values = 1.0 - self.eps
        values[-1] = np.nan
        with self.assertRaises(NumericError):
            classify_growth(self.eps, values)
        values[-1] = np.inf
        with self.assertRaises(NumericError):
            classify_growth(self.eps, values)

    def test_too_short(self):
        """Fewer than three points cannot be classified"""
        with self.assertRaises(ParameterError):
            classify_growth([0.5, 0.25], [1.0, 2.0])


if __name__ == '__main__':
    unittest.main()
