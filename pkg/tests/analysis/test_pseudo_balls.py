import unittest

import numpy as np

from bergman_spaces.analysis.pseudo_balls import (
    kernel_comparability_bounds,
    pseudo_ball_volume,
    pseudo_ball_volume_exact,
    tau_mass,
    volume_ratios,
)
from bergman_spaces.core.errors import DomainError, ParameterError
from bergman_spaces.core.params import QuadratureSpec

SPEC = QuadratureSpec(mc_samples=40000, seed=5)


class TestPseudoBalls(unittest.TestCase):
    """Test volumes and tau-masses of pseudo-hyperbolic balls"""

    def test_exact_volume_at_origin(self):
        """D(0, rho) is the Euclidean ball of radius rho"""
        self.assertAlmostEqual(pseudo_ball_volume_exact([0.0, 0.0], 0.5), 0.5 ** 4)

    def test_volume(self):
        """Monte Carlo volumes match the closed form"""
        for center in ([0.5], [0.9], [0.3, 0.4j]):
            estimate = pseudo_ball_volume(center, 0.4, SPEC)
            exact = pseudo_ball_volume_exact(center, 0.4)
            self.assertTrue(estimate.agrees_with(exact, sigmas=4.0, rtol=1e-3), (center, estimate, exact))

    def test_tau_mass_is_constant(self):
        """tau(D(z, rho)) does not depend on z"""
        for center in ([0.0, 0.0], [0.6, 0.0], [0.2j, -0.7]):
            estimate = tau_mass(center, 0.3, SPEC)
            expected = (0.09 / 0.91) ** 2
            self.assertTrue(estimate.agrees_with(expected, sigmas=4.0, rtol=1e-3), (center, estimate))

    def test_volume_ratios(self):
        """v(D(z, rho)) / (1-|z|^2)^(n+1) stays within 1/(1-rho^2)^(n+1)"""
        ratios, spread = volume_ratios([[0.0], [0.5], [0.8], [0.95]], 0.3, SPEC)
        self.assertEqual(len(ratios), 4)
        self.assertLess(spread, 1.0 / 0.91 ** 2 * 1.05)
        self.assertGreaterEqual(spread, 1.0)

    def test_kernel_comparability(self):
        """|1 - <z, w>| is comparable to 1 - |z|^2 and 1 - |w|^2 on D(z, rho)"""
        bounds = kernel_comparability_bounds([0.9, 0.0], 0.3, SPEC)
        for low in bounds[::2]:
            self.assertGreater(low, 0.5)
        for high in bounds[1::2]:
            self.assertLess(high, 2.0)

    def test_invalid(self):
        """Radius and center are checked"""
        with self.assertRaises(ParameterError):
            pseudo_ball_volume([0.5], 1.0)
        with self.assertRaises(DomainError):
            tau_mass([1.0], 0.5)


if __name__ == '__main__':
    unittest.main()
