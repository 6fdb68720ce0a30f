import unittest

import numpy as np
from scipy.special import gammaln

from bergman_spaces.core.errors import ParameterError
from bergman_spaces.core.params import QuadratureSpec
from bergman_spaces.quadrature.slices import disk_integral, slice_reduction_check


def sphere_moment(c, n):
    """Integral of |zeta_1|^c over the unit sphere of C^n."""
    return float(np.exp(gammaln(n) + gammaln(c / 2.0 + 1.0) - gammaln(n + c / 2.0)))


class TestSliceReduction(unittest.TestCase):
    """Test the sphere-to-disk reduction"""

    def test_disk_integral(self):
        """Integral of |w|^2 dA/pi over the disk is 1/2"""
        self.assertAlmostEqual(disk_integral(lambda w: np.abs(w) ** 2, (0.0, 1.0), 0.0), 0.5)

    def test_convergent(self):
        """Both sides match the closed form for c > -2"""
        spec = QuadratureSpec(sphere_samples=8192, seed=17)
        for c, n in ((2.0, 2), (-1.0, 2), (1.0, 3)):
            sphere, disk = slice_reduction_check(c, n, spec)
            exact = sphere_moment(c, n)
            self.assertFalse(disk.diverged)
            self.assertAlmostEqual(disk.value / exact, 1.0, delta=1e-3)
            self.assertTrue(sphere.agrees_with(exact, sigmas=4.0, rtol=1e-3), (c, n, sphere, exact))

    def test_divergent(self):
        """c = -3 diverges on both sides"""
        sphere, disk = slice_reduction_check(-3.0, 2)
        self.assertTrue(disk.diverged)
        self.assertTrue(sphere.diverged)

    def test_needs_two_variables(self):
        """The reduction needs n >= 2"""
        with self.assertRaises(ParameterError):
            slice_reduction_check(1.0, 1)


if __name__ == '__main__':
    unittest.main()
