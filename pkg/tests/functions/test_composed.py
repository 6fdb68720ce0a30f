import unittest

import numpy as np

from bergman_spaces.core.automorphism import Involution, UnitaryMap
from bergman_spaces.core.errors import DimensionError, NumericError
from bergman_spaces.functions.composed import Composed, Scaled, Sum, central_partials
from bergman_spaces.functions.kernel_power import KernelPower
from bergman_spaces.functions.polynomial import Polynomial


class TestCentralPartials(unittest.TestCase):
    """Test numeric complex partials"""

    def test_square(self):
        """d/dz z^2 = 2z"""
        z = np.array([0.3 + 0.2j])
        np.testing.assert_allclose(central_partials(lambda w: w[..., 0] ** 2, z), [2 * z[0]], atol=1e-9)

    def test_non_finite(self):
        """Non-finite differences raise NumericError with diagnostics"""
        with self.assertRaises(NumericError) as context:
            central_partials(lambda w: np.full(w.shape[:-1], np.inf), np.array([0.1, 0.2]))
        self.assertIn("step", context.exception.diagnostics)


class TestComposed(unittest.TestCase):
    """Test compositions, sums and multiples"""

    def test_involution_swaps_zero(self):
        """(f o phi_a)(0) = f(a)"""
        f = KernelPower([0.2, 0.1j], 2.0)
        a = np.array([0.4, -0.3j])
        self.assertAlmostEqual(Composed(Involution(a), f)([0.0, 0.0]), f(a))

    def test_unitary(self):
        """Composition with a unitary map evaluates f at U z"""
        f = Polynomial({(1, 1): 1.0})
        swap = UnitaryMap([[0, 1], [1, 0]])
        g = f.compose(swap)
        self.assertAlmostEqual(g([0.2, 0.5j]), f([0.5j, 0.2]))
        self.assertIn("UnitaryMap", g.describe())

    def test_dimension_mismatch(self):
        """Maps and functions must share a dimension"""
        with self.assertRaises(DimensionError):
            Composed(Involution([0.5]), Polynomial.coordinate(0, 2))
        with self.assertRaises(DimensionError):
            Sum([Polynomial.coordinate(0, 1), Polynomial.coordinate(0, 2)])

    def test_sum_and_scale(self):
        """Sums and multiples act on values and partials"""
        f = Polynomial.coordinate(0, 2)
        g = Polynomial.coordinate(1, 2)
        h = 2 * f + g
        self.assertIsInstance(h, Sum)
        self.assertIsInstance(2 * f, Scaled)
        z = np.array([0.1, 0.3j])
        self.assertAlmostEqual(h(z), 0.2 + 0.3j)
        np.testing.assert_allclose(h.gradient(z), [2.0, 1.0])


if __name__ == '__main__':
    unittest.main()
