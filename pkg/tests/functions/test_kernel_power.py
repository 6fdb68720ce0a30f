import unittest

import numpy as np

from bergman_spaces.core.errors import DomainError, ParameterError, SingularityError
from bergman_spaces.functions.composed import central_partials
from bergman_spaces.functions.descriptor import parse_function
from bergman_spaces.functions.kernel_power import KernelPower


class TestKernelPower(unittest.TestCase):
    """Test z -> scale (1 - <z, a>)^(-s)"""

    def test_value_at_origin(self):
        """The kernel power equals its scale at 0"""
        f = KernelPower([0.5, 0.2j], 3.5, scale=2.0)
        self.assertEqual(f([0.0, 0.0]), 2.0)

    def test_real_case(self):
        """n = 1, z = a = r gives (1 - r^2)^(-s)"""
        f = KernelPower([0.5], 2.0)
        self.assertAlmostEqual(f([0.5]).real, 0.75 ** -2.0)

    def test_partials(self):
        """Analytic partials agree with central differences"""
        f = KernelPower([0.4 + 0.1j, -0.3], 2.5, scale=1 - 1j)
        z = np.array([[0.2, 0.1j], [-0.5j, 0.3]])
        np.testing.assert_allclose(f.partials(z), central_partials(f.evaluate, z), atol=1e-7)

    def test_invalid(self):
        """Boundary centers and nonpositive exponents are rejected"""
        with self.assertRaises(DomainError):
            KernelPower([1.0], 2.0)
        with self.assertRaises(ParameterError):
            KernelPower([0.5], 0.0)

    def test_singular_base(self):
        """A vanishing base raises SingularityError"""
        f = KernelPower([0.5], 2.0)
        with self.assertRaises(SingularityError):
            f.evaluate(np.array([2.0 + 0j]))

    def test_describe_parses_back(self):
        """describe() reproduces the function"""
        f = KernelPower([0.5, -0.25j], 3.0, scale=0.5)
        g = parse_function(f.describe())
        z = np.array([0.1, 0.7j])
        self.assertAlmostEqual(g(z), f(z))


if __name__ == '__main__':
    unittest.main()
