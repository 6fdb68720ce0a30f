import unittest

from bergman_spaces.core.errors import ParameterError
from bergman_spaces.core.params import IntegralEstimate, QuadratureSpec, Region, WeightParams


class TestWeightParams(unittest.TestCase):
    """Test WeightParams validation"""

    def test_in_range(self):
        """0 < q < p + 2 is the comparable range"""
        self.assertTrue(WeightParams(1.0, 2.5).in_range)
        self.assertFalse(WeightParams(1.0, 3.0).in_range)

    def test_invalid_values(self):
        """Nonpositive exponents, alpha <= -1 and bad dimensions are rejected"""
        for args in ((0.0, 1.0), (1.0, -1.0), (1.0, 1.0, -1.0), (1.0, 1.0, 0.0, 0), (1.0, 1.0, 0.0, 1.5)):
            with self.assertRaises(ParameterError):
                WeightParams(*args)

    def test_with_q(self):
        """with_q keeps the other fields"""
        params = WeightParams(2.0, 1.0, 0.5, 2).with_q(2.0)
        self.assertEqual(params, WeightParams(2.0, 2.0, 0.5, 2))


class TestRegion(unittest.TestCase):
    """Test Region construction and its text form"""

    def test_describe_parse(self):
        """Every kind survives describe() followed by parse()"""
        for region in (Region(), Region.euclidean_ball(0.5), Region.annulus(0.25, 0.75),
                       Region.pseudo_ball([0.3, 0.1j], 0.5)):
            self.assertEqual(Region.parse(region.describe()), region)

    def test_u_bounds(self):
        """u = |z|^2 ranges"""
        self.assertEqual(Region.annulus(0.5, 1.0).u_bounds(), (0.25, 1.0))
        with self.assertRaises(ParameterError):
            Region.pseudo_ball([0.0], 0.5).u_bounds()

    def test_invalid_regions(self):
        """Radius and annulus bounds are validated"""
        with self.assertRaises(ParameterError):
            Region.euclidean_ball(1.5)
        with self.assertRaises(ParameterError):
            Region.annulus(0.8, 0.5)
        with self.assertRaises(ParameterError):
            Region.pseudo_ball([0.9, 0.9], 0.5)
        with self.assertRaises(ParameterError):
            Region.parse("cube(1)")


class TestQuadratureSpec(unittest.TestCase):
    """Test QuadratureSpec validation and its key-value form"""

    def test_mapping_round_trip(self):
        """to_mapping and from_mapping agree"""
        spec = QuadratureSpec(method="stratified-mc", mc_samples=1000, region=Region.euclidean_ball(0.25))
        self.assertEqual(QuadratureSpec.from_mapping(spec.to_mapping()), spec)

    def test_unknown_method(self):
        """Methods are drawn from a fixed set"""
        with self.assertRaises(ParameterError):
            QuadratureSpec(method="simpson")

    def test_unknown_key(self):
        """Unknown keys are reported"""
        with self.assertRaises(ParameterError) as context:
            QuadratureSpec.from_mapping({"radial_nodes": "3"})
        self.assertIn("radial_nodes", str(context.exception))

    def test_counts_positive(self):
        """Sample counts must be positive integers"""
        with self.assertRaises(ParameterError):
            QuadratureSpec(radial_order=0)


class TestIntegralEstimate(unittest.TestCase):
    """Test IntegralEstimate helpers"""

    def test_agrees_with(self):
        """Agreement uses the combined standard error"""
        estimate = IntegralEstimate(1.0, 0.1)
        self.assertTrue(estimate.agrees_with(1.25, sigmas=3.0))
        self.assertFalse(estimate.agrees_with(1.5, sigmas=3.0))
        self.assertTrue(estimate.agrees_with(IntegralEstimate(1.5, 0.1), sigmas=4.0))

    def test_scaled(self):
        """Scaling scales value and standard error"""
        estimate = IntegralEstimate(2.0, 0.5, 10).scaled(-2.0)
        self.assertEqual((estimate.value, estimate.stderr, estimate.samples_used), (-4.0, 1.0, 10))

    def test_negative_stderr(self):
        """A negative standard error is rejected"""
        with self.assertRaises(ParameterError):
            IntegralEstimate(1.0, -0.1)


if __name__ == '__main__':
    unittest.main()
