import unittest

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from bergman_spaces.core.automorphism import UnitaryMap
from bergman_spaces.core.errors import ParameterError
from bergman_spaces.core.params import WeightParams
from bergman_spaces.analysis.functionals import (
    comparability_report,
    evaluate_functionals,
    modulus_power,
    partial_integrals,
    theorem1_quantities,
)
from bergman_spaces.functions.kernel_power import KernelPower
from bergman_spaces.functions.polynomial import Polynomial

FAMILY_N2 = [
    Polynomial.coordinate(0, 2),
    Polynomial({(1, 1): 1.0}),
    Polynomial({(2, 0): 1.0, (0, 1): 1.0}),
    KernelPower([0.3, 0.2], 3.0),
]


class TestFunctionals(unittest.TestCase):
    """Test the four functionals"""

    def test_identity_function(self):
        """f(z) = z, p = q = 2, alpha = 0 gives (1/2, 1/12, 1/3, 1/3)"""
        values = [e.value for e in evaluate_functionals(Polynomial.coordinate(0, 1), WeightParams(2, 2))]
        np.testing.assert_allclose(values, [1 / 2, 1 / 12, 1 / 3, 1 / 3], rtol=1e-10)

    def test_constant(self):
        """Constants have no derivative integrals"""
        i1, i2, i3, i4 = evaluate_functionals(Polynomial.constant(2.0, 2), WeightParams(1.5, 1.0, 0.5, 2))
        self.assertAlmostEqual(i1.value, 2.0 ** 1.5)
        self.assertEqual((i2.value, i3.value, i4.value), (0.0, 0.0, 0.0))

    def test_modulus_power_limits(self):
        """0^e is 0, 1 or inf by the sign of e"""
        self.assertEqual(modulus_power(np.array([0.0]), 1.0)[0], 0.0)
        self.assertEqual(modulus_power(np.array([0.0]), 0.0)[0], 1.0)
        self.assertEqual(modulus_power(np.array([0.0]), -1.0)[0], np.inf)
        self.assertAlmostEqual(modulus_power(np.array([4.0]), 0.5)[0], 2.0)

    @given(st.floats(0.5, 3.0), st.floats(0.5, 3.0), st.sampled_from(FAMILY_N2))
    def test_ordering(self, p, q, f):
        """I2 <= I3 <= I4 on a shared node set"""
        _, i2, i3, i4 = evaluate_functionals(f, WeightParams(p, q, 0.0, 2))
        self.assertLessEqual(i2.value, i3.value * (1 + 1e-12))
        self.assertLessEqual(i3.value, i4.value * (1 + 1e-12))

    def test_homogeneity(self):
        """I_k(2f) = 2^p I_k(f)"""
        f = KernelPower([0.3, 0.2], 3.0)
        params = WeightParams(1.5, 1.0, 0.0, 2)
        base = evaluate_functionals(f, params)
        doubled = evaluate_functionals(2 * f, params)
        for b, d in zip(base, doubled):
            self.assertAlmostEqual(d.value / b.value, 2 ** 1.5, delta=1e-10)

    def test_complex_homogeneity(self):
        """I_k(c f) = |c|^p I_k(f) for complex c"""
        f = FAMILY_N2[1]
        params = WeightParams(2.0, 1.5, 0.0, 2)
        base = evaluate_functionals(f, params)
        scaled = evaluate_functionals((1.5 - 2j) * f, params)
        for b, s in zip(base, scaled):
            self.assertAlmostEqual(s.value / b.value, 2.5 ** 2.0, delta=1e-9)

    def test_q_equals_p(self):
        """The derivative integrals with q = p are the functionals at q = p"""
        f = FAMILY_N2[2]
        params = WeightParams(3.0, 1.0, 0.5, 2)
        reduced = theorem1_quantities(f, params)
        direct = evaluate_functionals(f, params.with_q(3.0))[1:]
        self.assertEqual([e.value for e in reduced], [e.value for e in direct])

    def test_unitary_invariance(self):
        """Composing with a unitary map leaves the functionals unchanged"""
        f = FAMILY_N2[2]
        u = UnitaryMap.random(2, np.random.default_rng(8))
        params = WeightParams(2.0, 2.0, 0.0, 2)
        base = [e.value for e in evaluate_functionals(f, params)]
        rotated = [e.value for e in evaluate_functionals(f.compose(u), params)]
        np.testing.assert_allclose(rotated, base, rtol=1e-6)

    def test_partial_integrals(self):
        """Coordinate integrals of z_1 with p = q = 2"""
        first, second = partial_integrals(Polynomial.coordinate(0, 2), WeightParams(2, 2, 0.0, 2))
        self.assertAlmostEqual(first.value, 1.0 / 6.0, delta=1e-10)
        self.assertEqual(second.value, 0.0)

    def test_dimension_mismatch(self):
        """Functions and parameters must agree on n"""
        with self.assertRaises(ParameterError):
            evaluate_functionals(Polynomial.coordinate(0, 2), WeightParams(2, 2))


class TestComparabilityReport(unittest.TestCase):
    """Test ratio reports over a family"""

    def test_envelope(self):
        """In-range ratios stay in a moderate band"""
        report = comparability_report(FAMILY_N2, WeightParams(2.0, 1.0, 0.0, 2))
        self.assertTrue(report.in_range)
        self.assertEqual(len(report.rows), len(FAMILY_N2))
        low, high = report.envelope()
        self.assertGreater(low, 1e-3)
        self.assertLess(high, 1e3)
        self.assertEqual(sorted(report.summary), [2, 3, 4])

    def test_zero_function_excluded(self):
        """Rows with vanishing I1 have no ratios"""
        zero = Polynomial({(1,): 0.0}, 1)
        report = comparability_report([zero, Polynomial.coordinate(0, 1)], WeightParams(2, 2), labels=["0", "z"])
        self.assertIsNone(report.rows[0].ratios())
        self.assertEqual(report.rows[1].label, "z")
        ratios = report.rows[1].ratios()
        np.testing.assert_allclose(ratios, [1 / 6, 2 / 3, 2 / 3], rtol=1e-10)

    def test_out_of_range(self):
        """q >= p + 2 is reported but flagged"""
        with self.assertLogs("bergman_spaces.analysis.functionals", level="INFO"):
            report = comparability_report([Polynomial.coordinate(0, 1)], WeightParams(1.0, 3.5))
        self.assertFalse(report.in_range)


if __name__ == '__main__':
    unittest.main()
