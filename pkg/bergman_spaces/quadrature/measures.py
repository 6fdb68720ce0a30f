"""Weighted volume measures dv_alpha = c_alpha (1-|z|^2)^alpha dv and exact moments."""
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.special import betainc, gammaln

from ..core.ball import squared_norm
from ..core.errors import ParameterError


def normalizing_constant(n: int, alpha: float) -> float:
    """c_alpha = Gamma(n+1+alpha) / (n! Gamma(alpha+1))."""
    if alpha <= -1:
        raise ParameterError(f"Weight exponent must exceed -1, got alpha={alpha}")
    if n < 1:
        raise ParameterError(f"Dimension must be positive, got n={n}")
    return float(np.exp(gammaln(n + 1 + alpha) - gammaln(n + 1) - gammaln(alpha + 1)))


def sphere_monomial_integral(m: Sequence[int], n: int = None) -> float:
    """Integral of |zeta^m|^2 over the unit sphere: (n-1)! m! / (n-1+|m|)!."""
    m = [int(k) for k in m]
    n = len(m) if n is None else n
    if n < 1 or len(m) != n:
        raise ParameterError(f"Multi-index {m} does not match dimension {n}")
    total = sum(m)
    log_value = gammaln(n) + sum(gammaln(k + 1) for k in m) - gammaln(n + total)
    return float(np.exp(log_value))


def ball_monomial_norm(m: Sequence[int], n: int, alpha: float) -> float:
    """Integral of |z^m|^2 dv_alpha: m! Gamma(n+1+alpha) / Gamma(n+1+|m|+alpha)."""
    m = [int(k) for k in m]
    if len(m) != n:
        raise ParameterError(f"Multi-index {m} does not match dimension {n}")
    if alpha <= -1:
        raise ParameterError(f"Weight exponent must exceed -1, got alpha={alpha}")
    log_value = sum(gammaln(k + 1) for k in m) + gammaln(n + 1 + alpha) - gammaln(n + 1 + sum(m) + alpha)
    return float(np.exp(log_value))


@dataclass(frozen=True)
class WeightedMeasure:
    n: int
    alpha: float = 0.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ParameterError(f"Dimension must be a positive integer, got n={self.n}")
        if self.alpha <= -1:
            raise ParameterError(f"Weight exponent must exceed -1, got alpha={self.alpha}")

    @property
    def c_alpha(self) -> float:
        return normalizing_constant(self.n, self.alpha)

    def density(self, z) -> np.ndarray:
        return self.c_alpha * (1.0 - squared_norm(z)) ** self.alpha

    def radial_cdf(self, u):
        """Measure of {|z|^2 <= u}; |z|^2 is Beta(n, alpha+1) distributed."""
        return betainc(self.n, self.alpha + 1.0, u)

    def euclidean_ball_mass(self, radius: float) -> float:
        return float(self.radial_cdf(radius ** 2))
