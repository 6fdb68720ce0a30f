"""Reduction of sphere integrals of |zeta_1|^c to weighted disk integrals."""
import logging
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.special import betainc, betaincinv, roots_jacobi, roots_legendre

from ..core.errors import ParameterError
from ..core.params import IntegralEstimate, QuadratureSpec
from .divergence import classify_growth, halving_cutoffs
from .sampling import SPHERE_STREAM, sphere_given_first_modulus, stream_generator

logger = logging.getLogger(__name__)

BAND_ORDER = 16
DISK_ANGLES = 8


def disk_integral(h, edges_u: Tuple[float, float], weight_exponent: float, order: int = BAND_ORDER,
                  log_spaced: bool = False) -> float:
    """Integral of h(w) (1-|w|^2)^weight_exponent dA(w)/pi over lo <= |w|^2 <= hi.

    ``h`` takes complex points of the disk; phases use an equispaced rule.
    """
    lo, hi = edges_u
    x, w = roots_legendre(order)
    if log_spaced:
        s = np.log(lo) + 0.5 * (np.log(hi) - np.log(lo)) * (1.0 + x)
        u = np.exp(s)
        du = 0.5 * (np.log(hi) - np.log(lo)) * w * u
    else:
        u = lo + 0.5 * (hi - lo) * (1.0 + x)
        du = 0.5 * (hi - lo) * w
    theta = 2.0 * np.pi * (np.arange(DISK_ANGLES) + 0.5) / DISK_ANGLES
    points = np.sqrt(u)[:, None] * np.exp(1j * theta)[None, :]
    averages = np.mean(h(points), axis=1)
    return float(np.sum(du * averages * (1.0 - u) ** weight_exponent))


def _disk_bottom(c: float, n: int, top: float, order: int) -> float:
    """Integral of u^(c/2) (1-u)^(n-2) over [0, top] with the endpoint power absorbed."""
    x, w = roots_jacobi(order, 0.0, c / 2.0)
    u = 0.5 * top * (1.0 + x)
    return float((0.5 * top) ** (c / 2.0 + 1.0) * np.sum(w * (1.0 - u) ** (n - 2)))


def slice_reduction_check(c: float, n: int, spec: QuadratureSpec = QuadratureSpec(),
                          cutoffs: Optional[Sequence[float]] = None) -> Tuple[IntegralEstimate, IntegralEstimate]:
    """Sphere integral of |zeta_1|^c against its disk form cal * int |w|^c (1-|w|^2)^(n-2) dA.

    The calibration constant is fixed by the c = 0 case.  Both sides are also
    computed on truncations {|zeta_1| >= eps}; a growing truncation sequence sets
    the diverged flag and the value is then the truncated lower bound.
    """
    if n < 2:
        raise ParameterError(f"Slice reduction needs n >= 2, got n={n}")
    eps = sorted(cutoffs or halving_cutoffs(), reverse=True)
    t_edges = [1.0] + [e ** 2 for e in eps]

    def power(w):
        return np.abs(w) ** c

    def one(w):
        return np.ones(w.shape)

    # disk side
    calibration = 1.0 / (
        disk_integral(one, (t_edges[1], 1.0), n - 2, log_spaced=True)
        + sum(disk_integral(one, (t_edges[k + 1], t_edges[k]), n - 2, log_spaced=True) for k in range(1, len(eps)))
        + _disk_bottom(0.0, n, t_edges[-1], BAND_ORDER)
    )
    disk_bands = [disk_integral(power, (t_edges[1], 1.0), n - 2, log_spaced=True)]
    disk_bands += [disk_integral(power, (t_edges[k + 1], t_edges[k]), n - 2, log_spaced=True)
                   for k in range(1, len(eps))]
    disk_truncated = calibration * np.cumsum(disk_bands)
    disk_fit = classify_growth(eps, disk_truncated)

    # sphere side: strata in t = |zeta_1|^2, which is Beta(1, n-1) under sigma
    rng = stream_generator(spec.seed, SPHERE_STREAM)
    per_band = max(2, spec.sphere_samples // (len(eps) + 1))
    sphere_means, sphere_vars = [], []
    band_edges = list(zip(t_edges[1:], t_edges[:-1])) + [(0.0, t_edges[-1])]
    for lo, hi in band_edges:
        g_lo, g_hi = betainc(1.0, n - 1.0, lo), betainc(1.0, n - 1.0, hi)
        t = betaincinv(1.0, n - 1.0, g_lo + (g_hi - g_lo) * rng.random(per_band))
        zeta = sphere_given_first_modulus(rng, t, n)
        values = (g_hi - g_lo) * np.abs(zeta[:, 0]) ** c
        sphere_means.append(np.mean(values))
        sphere_vars.append(np.var(values, ddof=1) / per_band)
    sphere_truncated = np.cumsum(sphere_means[:-1])
    sphere_fit = classify_growth(eps, sphere_truncated)

    samples = per_band * len(band_edges)
    if disk_fit.diverged or sphere_fit.diverged:
        logger.info("slice integral with c=%g, n=%d diverges (%s / %s)", c, n,
                    sphere_fit.classification, disk_fit.classification)
    if sphere_fit.diverged:
        sphere = IntegralEstimate(float(sphere_truncated[-1]), float(np.sqrt(np.sum(sphere_vars[:-1]))),
                                  samples, diverged=True)
    else:
        sphere = IntegralEstimate(float(np.sum(sphere_means)), float(np.sqrt(np.sum(sphere_vars))), samples)
    if disk_fit.diverged:
        disk = IntegralEstimate(float(disk_truncated[-1]), 0.0, len(disk_bands) * BAND_ORDER * DISK_ANGLES,
                                diverged=True)
    else:
        bottom = calibration * _disk_bottom(c, n, t_edges[-1], BAND_ORDER)
        disk = IntegralEstimate(float(disk_truncated[-1] + bottom), 0.0,
                                (len(disk_bands) + 1) * BAND_ORDER * DISK_ANGLES)
    return sphere, disk
