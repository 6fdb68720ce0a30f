"""Seeded samplers for the normalized measures on the ball and the sphere."""
from typing import List, Tuple

import numpy as np
from scipy.special import betainc, betaincinv

from ..core.ball import as_point, involution_map, real_jacobian, squared_norm
from ..core.params import Region
from .measures import WeightedMeasure

POLAR_STREAM = 1_000_003
SPHERE_STREAM = 1_000_033


def stream_generator(seed: int, stream: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream,))))


def stratum_generators(seed: int, strata: int) -> List[np.random.Generator]:
    """One independent stream per stratum, split deterministically from the seed."""
    return [np.random.Generator(np.random.PCG64(s)) for s in np.random.SeedSequence(seed).spawn(strata)]


def sphere_points(rng: np.random.Generator, count: int, n: int, antithetic: bool = True) -> np.ndarray:
    """Uniform points of the unit sphere from normalized complex Gaussians.

    With ``antithetic`` the second half of the batch is the negation of the first.
    """
    half = (count + 1) // 2 if antithetic else count
    gauss = rng.standard_normal((half, n)) + 1j * rng.standard_normal((half, n))
    zeta = gauss / np.sqrt(squared_norm(gauss))[:, None]
    if antithetic:
        zeta = np.concatenate([zeta, -zeta])[:count]
    return zeta


def stratified_uniforms(rng, count, stratum=0, strata=1) -> np.ndarray:
    return (stratum + rng.random(count)) / strata


def draw_region_points(rng: np.random.Generator, count: int, measure: WeightedMeasure, region: Region,
                       stratum: int = 0, strata: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """Points and importance weights whose weighted mean estimates the dv_alpha integral over ``region``.

    Radial strata split the radial distribution into equal-probability slices;
    direction pairs are antithetic.
    """
    n, alpha = measure.n, measure.alpha
    half = (count + 1) // 2
    probs = stratified_uniforms(rng, half, stratum, strata)
    zeta = sphere_points(rng, half, n, antithetic=False)
    if region.kind == "pseudo-ball":
        rho = region.radius
        center = as_point(region.center)
        u = rho ** 2 * probs ** (1.0 / n)
        x = np.sqrt(u)[:, None] * zeta
        x = np.concatenate([x, -x])[:count]
        w = involution_map(center, x)
        weights = rho ** (2 * n) * measure.density(w) * real_jacobian(center, x)
        return w, weights
    lo, hi = region.u_bounds()
    f_lo, f_hi = betainc(n, alpha + 1.0, lo), betainc(n, alpha + 1.0, hi)
    u = betaincinv(n, alpha + 1.0, f_lo + probs * (f_hi - f_lo))
    points = np.sqrt(u)[:, None] * zeta
    points = np.concatenate([points, -points])[:count]
    return points, np.full(points.shape[0], f_hi - f_lo)


def sphere_given_first_modulus(rng: np.random.Generator, t: np.ndarray, n: int) -> np.ndarray:
    """Uniform sphere points conditioned on |zeta_1|^2 = t."""
    count = t.shape[0]
    zeta = np.empty((count, n), dtype=complex)
    zeta[:, 0] = np.sqrt(t) * np.exp(2j * np.pi * rng.random(count))
    if n > 1:
        rest = sphere_points(rng, count, n - 1, antithetic=False)
        zeta[:, 1:] = np.sqrt(1.0 - t)[:, None] * rest
    return zeta
