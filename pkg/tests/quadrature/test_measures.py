import unittest

import numpy as np

from bergman_spaces.core.errors import ParameterError
from bergman_spaces.quadrature.measures import (
    WeightedMeasure,
    ball_monomial_norm,
    normalizing_constant,
    sphere_monomial_integral,
)


class TestWeightedMeasure(unittest.TestCase):
    """Test normalizing constants and exact moments"""

    def test_normalizing_constant(self):
        """c_alpha for a few closed cases"""
        self.assertAlmostEqual(normalizing_constant(1, 0.0), 1.0)
        self.assertAlmostEqual(normalizing_constant(1, 1.0), 2.0)
        self.assertAlmostEqual(normalizing_constant(2, 1.0), 3.0)

    def test_monomials(self):
        """Known moments of z and z1 z2"""
        self.assertAlmostEqual(ball_monomial_norm((1,), 1, 0.0), 0.5)
        self.assertAlmostEqual(ball_monomial_norm((1, 0), 2, 0.0), 1.0 / 3.0)
        self.assertAlmostEqual(sphere_monomial_integral((1, 1)), 1.0 / 6.0)
        self.assertAlmostEqual(sphere_monomial_integral((0, 0, 0)), 1.0)

    def test_radial_distribution(self):
        """|z|^2 has total mass one and Euclidean balls carry r^(2n) when alpha = 0"""
        measure = WeightedMeasure(2, 0.0)
        self.assertAlmostEqual(float(measure.radial_cdf(1.0)), 1.0)
        self.assertAlmostEqual(measure.euclidean_ball_mass(0.5), 0.5 ** 4)

    def test_density(self):
        """Density is c_alpha (1 - |z|^2)^alpha"""
        measure = WeightedMeasure(1, 1.0)
        self.assertAlmostEqual(float(measure.density(np.array([0.5]))), 2.0 * 0.75)

    def test_invalid(self):
        """alpha <= -1 and mismatched indices are rejected"""
        with self.assertRaises(ParameterError):
            WeightedMeasure(1, -1.0)
        with self.assertRaises(ParameterError):
            normalizing_constant(0, 0.0)
        with self.assertRaises(ParameterError):
            ball_monomial_norm((1,), 2, 0.0)


if __name__ == '__main__':
    unittest.main()
