"""Monte Carlo volumes and tau-masses of pseudo-hyperbolic balls."""
import logging
from typing import Callable, Sequence, Tuple

import numpy as np

from ..core.ball import PseudoHyperbolicBall, as_point, hermitian_inner, involution_map, squared_norm
from ..core.params import IntegralEstimate, QuadratureSpec
from ..quadrature.sampling import sphere_points, stratified_uniforms, stratum_generators

logger = logging.getLogger(__name__)

MIN_HITS = 10


def _window_estimate(ball: PseudoHyperbolicBall, spec: QuadratureSpec,
                     weight: Callable[[np.ndarray], np.ndarray]) -> IntegralEstimate:
    """Hit-or-miss integral of ``weight`` dv over the ball, sampling the radial shell that contains it.

    The shell is split into equal-volume radial strata.
    """
    n = ball.n
    low, high = ball.radial_window()
    t_low, t_high = low ** (2 * n), high ** (2 * n)
    shell = t_high - t_low
    strata = spec.strata
    per_stratum = max(2, spec.mc_samples // strata)
    means, variances, hits = [], [], 0
    for stratum, rng in enumerate(stratum_generators(spec.seed, strata)):
        t = t_low + shell * stratified_uniforms(rng, per_stratum, stratum, strata)
        w = (t ** (1.0 / (2 * n)))[:, None] * sphere_points(rng, per_stratum, n, antithetic=False)
        inside = np.sqrt(squared_norm(involution_map(ball.center, w))) < ball.radius
        values = np.where(inside, shell * weight(w), 0.0)
        hits += int(np.sum(inside))
        means.append(np.mean(values))
        variances.append(np.var(values, ddof=1) / per_stratum)
    if hits < MIN_HITS:
        logger.warning("only %d samples fell in D(%s, %g); estimate is unreliable", hits,
                       ball.center.tolist(), ball.radius)
    return IntegralEstimate(float(np.sum(means) / strata), float(np.sqrt(np.sum(variances)) / strata),
                            per_stratum * strata)


def pseudo_ball_volume(center, rho: float, spec: QuadratureSpec = QuadratureSpec()) -> IntegralEstimate:
    """Normalized volume v(D(center, rho))."""
    ball = PseudoHyperbolicBall(center, rho)
    return _window_estimate(ball, spec, lambda w: np.ones(w.shape[0]))


def pseudo_ball_volume_exact(center, rho: float) -> float:
    return PseudoHyperbolicBall(center, rho).exact_volume()


def tau_mass(center, rho: float, spec: QuadratureSpec = QuadratureSpec()) -> IntegralEstimate:
    """Mass of D(center, rho) under dtau = dv / (1-|w|^2)^(n+1)."""
    ball = PseudoHyperbolicBall(center, rho)
    return _window_estimate(ball, spec, lambda w: (1.0 - squared_norm(w)) ** (-(ball.n + 1)))


def volume_ratios(centers: Sequence, rho: float, spec: QuadratureSpec = QuadratureSpec()):
    """v(D(z, rho)) / (1-|z|^2)^(n+1) for each center, with the max/min spread."""
    ratios = []
    for center in centers:
        center = as_point(center)
        volume = pseudo_ball_volume(center, rho, spec)
        ratios.append(volume.value / (1.0 - float(squared_norm(center))) ** (center.shape[-1] + 1))
    return ratios, max(ratios) / min(ratios)


def kernel_comparability_bounds(center, rho: float, spec: QuadratureSpec = QuadratureSpec(),
                                samples: int = 4096) -> Tuple[float, float, float, float]:
    """Sampled (min, max) of |1-<z,w>|/(1-|z|^2) and of |1-<z,w>|/(1-|w|^2) over w in D(z, rho)."""
    ball = PseudoHyperbolicBall(center, rho)
    rng = stratum_generators(spec.seed, 1)[0]
    n = ball.n
    radii = rho * rng.random(samples) ** (1.0 / (2 * n))
    x = radii[:, None] * sphere_points(rng, samples, n)
    w = involution_map(ball.center, x)
    kernel = np.abs(1.0 - hermitian_inner(ball.center, w))
    first = kernel / (1.0 - float(squared_norm(ball.center)))
    second = kernel / (1.0 - squared_norm(w))
    return float(first.min()), float(first.max()), float(second.min()), float(second.max())
