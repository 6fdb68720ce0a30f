"""Integration over the unit ball against dv_alpha.

The product rule works in polar form with u = |z|^2.  The radial factor
c_alpha n u^(n-1) (1-u)^alpha is absorbed by Gauss-Jacobi nodes; the sphere
is parametrized by t_k = |zeta_k|^2 on the simplex (stick-breaking with
Gauss-Jacobi nodes) times an equispaced rule in each phase, which integrates
|zeta^m|^2 exactly.
"""
import logging
from typing import Callable, List, Tuple

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from ..core.ball import as_point, involution_map, real_jacobian
from ..core.errors import NumericError, ParameterError
from ..core.params import IntegralEstimate, QuadratureSpec, Region
from .measures import WeightedMeasure
from .sampling import (
    POLAR_STREAM,
    draw_region_points,
    sphere_points,
    stratum_generators,
    stream_generator,
)

logger = logging.getLogger(__name__)

JITTER = 1e-12
MAX_RESAMPLES = 8

Integrand = Callable[[np.ndarray], np.ndarray]


def radial_rule(n: int, alpha: float, order: int, region: Region = Region()) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes in u = |z|^2 and weights carrying c_alpha n u^(n-1) (1-u)^alpha du."""
    measure = WeightedMeasure(n, alpha)
    scale = measure.c_alpha * n
    if region.kind == "full-ball":
        x, w = roots_jacobi(order, alpha, n - 1)
        u = 0.5 * (1.0 + x)
        return u, scale * 2.0 ** -(alpha + n) * w
    if region.kind == "euclidean-ball":
        top = region.radius ** 2
        x, w = roots_jacobi(order, 0.0, n - 1)
        u = 0.5 * top * (1.0 + x)
        return u, scale * (0.5 * top) ** n * w * (1.0 - u) ** alpha
    if region.kind == "annulus":
        bottom, top = region.u_bounds()
        x, w = roots_legendre(order)
        u = bottom + 0.5 * (top - bottom) * (1.0 + x)
        return u, scale * 0.5 * (top - bottom) * w * u ** (n - 1) * (1.0 - u) ** alpha
    raise ParameterError(f"No radial rule for region {region.describe()}")


def sphere_rule(n: int, order: int, angle_points: int) -> Tuple[np.ndarray, np.ndarray]:
    """Points of the unit sphere in C^n with weights summing to 1."""
    moduli = np.ones((1, 1))
    weights = np.ones(1)
    if n > 1:
        remaining = np.ones(1)
        columns = []
        for k in range(1, n):
            x, w = roots_jacobi(order, n - k - 1, 0.0)
            u = 0.5 * (1.0 + x)
            w = w / np.sum(w)
            columns = [np.multiply.outer(c, np.ones(order)).ravel() for c in columns]
            remaining_grid = np.multiply.outer(remaining, np.ones(order)).ravel()
            u_grid = np.tile(u, remaining.size)
            columns.append(u_grid * remaining_grid)
            remaining = remaining_grid * (1.0 - u_grid)
            weights = np.multiply.outer(weights, w).ravel()
        columns.append(remaining)
        moduli = np.sqrt(np.maximum(np.stack(columns, axis=-1), 0.0))
    theta = 2.0 * np.pi * (np.arange(angle_points) + 0.5) / angle_points
    phases = np.stack(np.meshgrid(*([theta] * n), indexing="ij"), axis=-1).reshape(-1, n)
    rotations = np.exp(1j * phases)
    points = (moduli[:, None, :] * rotations[None, :, :]).reshape(-1, n)
    point_weights = np.multiply.outer(weights, np.full(rotations.shape[0], 1.0 / rotations.shape[0])).ravel()
    return points, point_weights


def ball_rule(measure: WeightedMeasure, spec: QuadratureSpec) -> Tuple[np.ndarray, np.ndarray]:
    """Product-rule nodes over spec.region with weights for dv_alpha."""
    region = spec.region
    if region.kind == "pseudo-ball":
        base = ball_rule(WeightedMeasure(measure.n, 0.0), spec.replace(region=Region.euclidean_ball(region.radius)))
        x, w_x = base
        center = as_point(region.center)
        points = involution_map(center, x)
        return points, w_x * measure.density(points) * real_jacobian(center, x)
    u, w_r = radial_rule(measure.n, measure.alpha, spec.radial_order, region)
    zeta, w_s = sphere_rule(measure.n, spec.sphere_order, spec.angle_points)
    points = (np.sqrt(u)[:, None, None] * zeta[None, :, :]).reshape(-1, measure.n)
    return points, np.multiply.outer(w_r, w_s).ravel()


def _as_columns(values, count):
    values = np.asarray(values, dtype=float)
    if values.ndim == 1:
        values = values[:, None]
    if values.shape[0] != count:
        raise NumericError(f"Integrand returned {values.shape[0]} values for {count} points")
    return values


def _evaluate_with_jitter(integrand, points):
    values = _as_columns(integrand(points), points.shape[0])
    bad = ~np.all(np.isfinite(values), axis=1)
    if np.any(bad):
        nudged = points[bad] + JITTER
        values[bad] = _as_columns(integrand(nudged), nudged.shape[0])
        bad = ~np.all(np.isfinite(values), axis=1)
    return values, bad


def _product_rule(integrand, measure, spec) -> List[IntegralEstimate]:
    points, weights = ball_rule(measure, spec)
    values, bad = _evaluate_with_jitter(integrand, points)
    rejected = int(np.sum(bad))
    if rejected:
        logger.warning("dropped %d of %d quadrature nodes with non-finite integrand", rejected, points.shape[0])
        values[bad] = 0.0
    logger.debug("product rule over %s with %d nodes", spec.region.describe(), points.shape[0])
    totals = np.sum(weights[:, None] * values, axis=0)
    return [IntegralEstimate(float(t), 0.0, points.shape[0], rejected=rejected) for t in totals]


def _monte_carlo(integrand, measure, spec) -> List[IntegralEstimate]:
    strata = spec.strata if spec.method == "stratified-mc" else 1
    per_stratum = max(2, spec.mc_samples // strata)
    per_stratum += per_stratum % 2
    means, variances = [], []
    rejected = 0
    for stratum, rng in enumerate(stratum_generators(spec.seed, strata)):
        points, weights = draw_region_points(rng, per_stratum, measure, spec.region, stratum, strata)
        values, bad = _evaluate_with_jitter(integrand, points)
        attempts = 0
        while np.any(bad):
            attempts += 1
            if attempts > MAX_RESAMPLES:
                raise NumericError(
                    "Integrand stayed non-finite after resampling",
                    {"stratum": stratum, "points": int(np.sum(bad))},
                )
            count = int(np.sum(bad))
            rejected += count
            fresh, fresh_weights = draw_region_points(rng, count + count % 2, measure, spec.region, stratum, strata)
            points[bad], weights[bad] = fresh[:count], fresh_weights[:count]
            values[bad], still_bad = _evaluate_with_jitter(integrand, fresh[:count])
            bad_index = np.flatnonzero(bad)
            bad = np.zeros_like(bad)
            bad[bad_index[still_bad]] = True
        weighted = weights[:, None] * values
        half = per_stratum // 2
        pairs = 0.5 * (weighted[:half] + weighted[half:])
        means.append(np.mean(pairs, axis=0))
        variances.append(np.var(pairs, axis=0, ddof=1) / half)
    if rejected:
        logger.warning("resampled %d Monte Carlo points with non-finite integrand", rejected)
    value = np.sum(np.array(means), axis=0) / strata
    stderr = np.sqrt(np.sum(np.array(variances), axis=0)) / strata
    used = per_stratum * strata
    return [IntegralEstimate(float(v), float(s), used, rejected=rejected) for v, s in zip(value, stderr)]


def integrate_ball_many(integrand: Integrand, measure: WeightedMeasure,
                        spec: QuadratureSpec = QuadratureSpec()) -> List[IntegralEstimate]:
    """Integrate several integrands on one shared set of nodes.

    ``integrand`` maps points of shape (N, n) to values of shape (N,) or (N, K).
    """
    if spec.region.kind == "pseudo-ball" and len(spec.region.center) != measure.n:
        raise ParameterError("Pseudo-ball center does not match the measure dimension")
    if spec.method == "product-rule":
        return _product_rule(integrand, measure, spec)
    return _monte_carlo(integrand, measure, spec)


def integrate_ball(integrand: Integrand, measure: WeightedMeasure,
                   spec: QuadratureSpec = QuadratureSpec()) -> IntegralEstimate:
    return integrate_ball_many(integrand, measure, spec)[0]


def polar_decompose_check(integrand: Integrand, measure: WeightedMeasure,
                          spec: QuadratureSpec = QuadratureSpec()) -> Tuple[IntegralEstimate, IntegralEstimate]:
    """The same integral by direct Monte Carlo and by radial quadrature times sphere sampling."""
    if spec.region.kind != "full-ball":
        raise ParameterError("Polar decomposition check runs over the full ball")
    method = spec.method if spec.method != "product-rule" else "monte-carlo"
    direct = integrate_ball(integrand, measure, spec.replace(method=method))
    u, w_r = radial_rule(measure.n, measure.alpha, spec.radial_order)
    rng = stream_generator(spec.seed, POLAR_STREAM)
    count = spec.sphere_samples + spec.sphere_samples % 2
    zeta = sphere_points(rng, count, measure.n)
    points = (np.sqrt(u)[None, :, None] * zeta[:, None, :]).reshape(-1, measure.n)
    values = np.asarray(integrand(points), dtype=float).reshape(count, u.size)
    per_direction = np.sum(values * w_r[None, :], axis=1)
    half = count // 2
    pairs = 0.5 * (per_direction[:half] + per_direction[half:])
    polar = IntegralEstimate(
        float(np.mean(pairs)),
        float(np.std(pairs, ddof=1) / np.sqrt(half)),
        count * u.size,
    )
    return direct, polar
