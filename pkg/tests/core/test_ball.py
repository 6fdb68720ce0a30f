import unittest

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from bergman_spaces.core.ball import (
    PseudoHyperbolicBall,
    hermitian_inner,
    in_pseudo_ball,
    invariant_density,
    involution_apply,
    involution_map,
    one_minus_sq_identity,
    pseudo_hyperbolic_distance,
    real_jacobian,
    squared_norm,
)
from bergman_spaces.core.errors import DimensionError, DomainError, ParameterError


def ball_point(n, max_radius=0.95):
    """Points of the ball of C^n with |z| <= max_radius."""
    coords = st.lists(st.floats(-1.0, 1.0), min_size=2 * n, max_size=2 * n)
    radius = st.floats(0.0, max_radius)

    def build(values, r):
        z = np.array(values[:n]) + 1j * np.array(values[n:])
        norm = np.sqrt(squared_norm(z))
        if norm == 0:
            return np.zeros(n, dtype=complex)
        return r * z / norm

    return st.builds(build, coords, radius)


class TestInnerProduct(unittest.TestCase):
    """Test the Hermitian inner product"""

    def test_conjugates_second_argument(self):
        """<i, i> is 1, not -1"""
        self.assertAlmostEqual(hermitian_inner((1j,), (1j,)), 1.0)

    def test_dimension_mismatch(self):
        """Points of different dimensions are rejected"""
        with self.assertRaises(DimensionError):
            hermitian_inner((0.1, 0.2), (0.1,))

    def test_batch_shape(self):
        """A batch of points gives one value per point"""
        z = np.array([[0.1, 0.2], [0.3j, 0.0]])
        result = hermitian_inner(z, np.array([1.0, 1.0]))
        self.assertEqual(result.shape, (2,))


class TestInvolution(unittest.TestCase):
    """Test phi_a and the identities it satisfies"""

    def test_exchanges_zero_and_center(self):
        """phi_a(0) = a and phi_a(a) = 0"""
        a = np.array([0.3, -0.2j])
        np.testing.assert_allclose(involution_apply(a, np.zeros(2)), a, atol=1e-15)
        np.testing.assert_allclose(involution_apply(a, a), np.zeros(2), atol=1e-15)

    def test_zero_center_is_negation(self):
        """phi_0(z) = -z"""
        z = np.array([0.25, 0.5j])
        np.testing.assert_allclose(involution_apply(np.zeros(2), z), -z)

    def test_disk_formula(self):
        """In one variable phi_a(z) = (a - z) / (1 - conj(a) z)"""
        a, z = 0.4 + 0.1j, -0.3 + 0.5j
        expected = (a - z) / (1 - np.conj(a) * z)
        self.assertAlmostEqual(complex(involution_apply((a,), (z,))[0]), expected)

    def test_rejects_boundary_center(self):
        """The center must lie strictly inside the ball"""
        with self.assertRaises(DomainError):
            involution_apply((1.0,), (0.0,))

    @given(ball_point(2), ball_point(2))
    def test_self_inverse(self, a, z):
        """phi_a(phi_a(z)) = z"""
        back = involution_map(a, involution_map(a, z))
        np.testing.assert_allclose(back, z, atol=1e-9)

    @given(ball_point(3), ball_point(3))
    def test_one_minus_sq_identity(self, a, z):
        """1 - |phi_a(z)|^2 = (1-|a|^2)(1-|z|^2)/|1-<z,a>|^2"""
        lhs = 1.0 - float(squared_norm(involution_map(a, z)))
        rhs = one_minus_sq_identity(a, z)
        self.assertAlmostEqual(lhs, rhs, delta=1e-9 * max(1.0, rhs))


class TestPseudoHyperbolicBalls(unittest.TestCase):
    """Test pseudo-hyperbolic distance and balls"""

    @given(ball_point(2), ball_point(2))
    def test_distance_symmetric(self, z, w):
        """|phi_z(w)| = |phi_w(z)|"""
        self.assertAlmostEqual(pseudo_hyperbolic_distance(z, w), pseudo_hyperbolic_distance(w, z), delta=1e-9)

    def test_center_belongs_to_ball(self):
        """The center lies in every D(z, rho)"""
        self.assertTrue(in_pseudo_ball((0.6,), 0.1, (0.6,)))

    def test_radius_range(self):
        """rho must lie in (0, 1)"""
        for rho in (0.0, 1.0, -0.5):
            with self.assertRaises(ParameterError):
                in_pseudo_ball((0.0,), rho, (0.0,))

    def test_centered_volume(self):
        """v(D(0, rho)) = rho^(2n)"""
        ball = PseudoHyperbolicBall(np.zeros(2), 0.5)
        self.assertAlmostEqual(ball.exact_volume(), 0.5 ** 4)

    def test_radial_window_contains_ball(self):
        """Points of D(a, rho) have moduli inside the radial window"""
        ball = PseudoHyperbolicBall(np.array([0.7, 0.0]), 0.5)
        low, high = ball.radial_window()
        rng = np.random.default_rng(3)
        x = rng.normal(size=(500, 2)) + 1j * rng.normal(size=(500, 2))
        x = 0.5 * rng.random(500)[:, None] * x / np.sqrt(squared_norm(x))[:, None]
        moduli = np.sqrt(squared_norm(involution_map(ball.center, x)))
        self.assertTrue(np.all(moduli >= low - 1e-12))
        self.assertTrue(np.all(moduli <= high + 1e-12))

    def test_tau_mass_closed_form(self):
        """tau(D(a, rho)) = (rho^2/(1-rho^2))^n whatever the center"""
        for center in ([0.0, 0.0], [0.9, 0.0], [0.3j, 0.4]):
            ball = PseudoHyperbolicBall(np.array(center), 0.25)
            self.assertAlmostEqual(ball.exact_tau_mass(), (0.0625 / 0.9375) ** 2)


class TestDensities(unittest.TestCase):
    """Test the Jacobian of phi_a and the invariant density"""

    def test_jacobian_at_origin(self):
        """The Jacobian of phi_a at 0 is (1-|a|^2)^(n+1)"""
        a = np.array([0.5, 0.0])
        self.assertAlmostEqual(float(real_jacobian(a, np.zeros(2))), 0.75 ** 3)

    @given(ball_point(2, 0.8), ball_point(2, 0.8))
    def test_invariant_measure_pulls_back(self, a, x):
        """J(a, x) tau(phi_a(x)) = tau(x)"""
        w = involution_map(a, x)
        lhs = real_jacobian(a, x) * invariant_density(w)
        self.assertAlmostEqual(lhs / invariant_density(x), 1.0, delta=1e-8)

    def test_invariant_density_rejects_boundary(self):
        """The boundary is excluded"""
        with self.assertRaises(DomainError):
            invariant_density((1.0, 0.0))


if __name__ == '__main__':
    unittest.main()
