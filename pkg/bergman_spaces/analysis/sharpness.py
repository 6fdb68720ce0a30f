"""Truncated invariant-gradient integrals of f(z) = z_1, which fail to converge once q >= p + 2.

For f = z_1 everything depends on u = |z|^2 and x = |z_1|^2:
|f|^2 = x and |invariant grad f|^2 = (1 - u)(1 - x).  With t = x/u distributed
as (n-1)(1-t)^(n-2) dt on the sphere, the integral over {|z| < R, |z_1| >= eps} is

    c_alpha n int_{eps^2}^{R^2} x^((p-q)/2) (1-x)^(q/2)
        int_x^{R^2} u^(n-2) (1-u)^(alpha+q/2) (n-1)(1 - x/u)^(n-2) du dx

(for n = 1, x = u and the inner integral disappears).  Values are reported in
polar units, divided by 2n, so that for n = 1 and alpha = 0 the region
{eps <= |z| <= R} contributes int_eps^R r^(2n-1+p-q) (1-r^2)^q dr.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import roots_legendre

from ..core.errors import ParameterError
from ..quadrature.divergence import GrowthFit, classify_growth, halving_cutoffs
from ..quadrature.measures import normalizing_constant

logger = logging.getLogger(__name__)

PROFILE_RADIUS = 0.5
OUTER_ORDER = 24
INNER_ORDER = 24


@dataclass(frozen=True)
class SharpnessProfile:
    p: float
    q: float
    alpha: float
    n: int
    rows: List[Tuple[float, float]]     # (eps, truncated integral in polar units)
    fit: GrowthFit

    @property
    def classification(self) -> str:
        return self.fit.classification

    @property
    def expected(self) -> str:
        """Classification the exponent predicts: x^((p-q)/2) is integrable at 0 iff q < p + 2."""
        if self.q < self.p + 2:
            return "convergent"
        if self.q == self.p + 2:
            return "log-divergent"
        return "power-divergent"

    @property
    def radial_exponent(self) -> float:
        return 2 * self.n - 1 + self.p - self.q


def _band_integral(p, q, alpha, n, lo, hi, top):
    """Contribution of lo <= |z_1|^2 <= hi, in x-space, with log-spaced nodes."""
    x_nodes, x_weights = roots_legendre(OUTER_ORDER)
    half = 0.5 * np.log(hi / lo)
    x = np.exp(np.log(lo) + half * (1.0 + x_nodes))
    dx = half * x_weights * x
    outer = x ** ((p - q) / 2.0) * (1.0 - x) ** (q / 2.0)
    if n == 1:
        inner = (1.0 - x) ** (alpha + q / 2.0)
        return float(np.sum(dx * outer * inner))
    u_nodes, u_weights = roots_legendre(INNER_ORDER)
    span = 0.5 * (top - x)
    u = x[:, None] + span[:, None] * (1.0 + u_nodes[None, :])
    kernel = u ** (n - 2) * (1.0 - u) ** (alpha + q / 2.0) * (n - 1) * (1.0 - x[:, None] / u) ** (n - 2)
    inner = span * np.sum(u_weights[None, :] * kernel, axis=1)
    return float(np.sum(dx * outer * inner))


def sharpness_profile(p: float, alpha: float, n: int, q: float,
                      cutoffs: Optional[Sequence[float]] = None,
                      radius: float = PROFILE_RADIUS) -> SharpnessProfile:
    if p <= 0 or q <= 0 or alpha <= -1 or n < 1:
        raise ParameterError(f"Invalid sharpness parameters p={p}, q={q}, alpha={alpha}, n={n}")
    eps = sorted(cutoffs or halving_cutoffs(), reverse=True)
    if eps[0] >= radius:
        raise ParameterError(f"Cutoffs must stay below the profile radius {radius}")
    top = radius ** 2
    edges = [top] + [e ** 2 for e in eps]
    bands = [_band_integral(p, q, alpha, n, lo, hi, top) for hi, lo in zip(edges[:-1], edges[1:])]
    # dv_alpha carries c_alpha n; polar units divide by 2n
    truncated = normalizing_constant(n, alpha) / 2.0 * np.cumsum(bands)
    fit = classify_growth(eps, truncated)
    logger.info("sharpness profile n=%d p=%g q=%g alpha=%g: %s (slope %.3f)", n, p, q, alpha,
                fit.classification, fit.increment_slope)
    return SharpnessProfile(p, q, alpha, n, list(zip(eps, truncated.tolist())), fit)
