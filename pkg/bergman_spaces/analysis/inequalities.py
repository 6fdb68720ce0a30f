"""Ratio checks for the inequalities the equivalence of the functionals rests on."""
import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import roots_legendre

from ..core.ball import squared_norm
from ..core.errors import NumericError, ParameterError
from ..core.holo_base import HoloFunction
from ..core.params import IntegralEstimate, QuadratureSpec, Region, WeightParams
from ..functions.derivatives import derivative_fields
from ..quadrature.divergence import GrowthFit, classify_growth
from ..quadrature.measures import WeightedMeasure
from ..quadrature.rules import integrate_ball
from .functionals import modulus_power, origin_power

logger = logging.getLogger(__name__)

INNER_RADIUS = 0.25
OUTER_RADIUS = 0.75
PROFILE_HALVINGS = 12
PROFILE_ORDER = 16
PROFILE_ANGLES = 16
REGULAR_GRADIENT = 1e-4
ZERO_SEARCH_STEP = 0.05
ORDER_RADII = (1e-2, 1e-3)
VANISHING_FLOOR = 1e-15


def embedding_exponent(n: int, p: float, alpha: float) -> float:
    """beta with int |f| dv_beta <= C (int |f|^p dv_alpha)^(1/p) for p <= 1."""
    return (n + 1 + alpha) / p - (n + 1)


def embedding_check(f: HoloFunction, p: float, alpha: float, spec: QuadratureSpec = QuadratureSpec()) -> float:
    if not 0 < p <= 1:
        raise ParameterError(f"Embedding check needs 0 < p <= 1, got p={p}")
    beta = embedding_exponent(f.n, p, alpha)
    lhs = integrate_ball(lambda z: np.abs(f.evaluate(z)), WeightedMeasure(f.n, beta), spec)
    rhs = integrate_ball(lambda z: modulus_power(np.abs(f.evaluate(z)), p), WeightedMeasure(f.n, alpha), spec)
    return lhs.value / rhs.value ** (1.0 / p)


def energy_check(f: HoloFunction, p: float, spec: QuadratureSpec = QuadratureSpec()) -> Tuple[float, float]:
    """Both directions of int |f|^p dv ~ |f(0)|^p + int |f|^(p-2) |invariant grad f|^2 dv."""
    measure = WeightedMeasure(f.n, 0.0)
    lhs = integrate_ball(lambda z: modulus_power(np.abs(f.evaluate(z)), p), measure, spec).value

    def energy(z):
        fields = derivative_fields(f, z)
        with np.errstate(invalid="ignore"):
            return modulus_power(fields.modulus, p - 2.0) * fields.invariant ** 2

    rhs = origin_power(f, p) + integrate_ball(energy, measure, spec).value
    return lhs / rhs, rhs / lhs


@dataclass(frozen=True)
class LocalEstimate:
    ratio: float
    numerator: IntegralEstimate
    denominator: IntegralEstimate
    growth: Optional[GrowthFit] = None   # transversal profile at a zero of f, if any
    zero_order: Optional[int] = None     # vanishing order of f across its zero set
    critical_q: Optional[float] = None   # q from which the local integral diverges

    @property
    def diverged(self) -> bool:
        return self.numerator.diverged


def _newton_zero(f: HoloFunction, start: np.ndarray, radius: float, iterations: int = 60) -> Optional[np.ndarray]:
    """Minimal-norm Newton iteration from ``start``; None when no zero is found inside ``radius``."""
    z = np.array(start, dtype=complex)
    for _ in range(iterations):
        value = complex(f.evaluate(z))
        if abs(value) < 1e-13:
            return z
        grad = f.partials(z)
        g2 = float(np.sum(np.abs(grad) ** 2))
        if g2 == 0.0:
            return None
        z = z - value * np.conj(grad) / g2
        if squared_norm(z) >= radius ** 2:
            return None
    return None


def _gradient_size(f: HoloFunction, z: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.abs(f.partials(z)) ** 2)))


def _candidate_directions(n: int) -> List[np.ndarray]:
    """Unit vectors e_k, (e_j + e_k)/sqrt 2 and (e_j + i e_k)/sqrt 2."""
    eye = np.eye(n, dtype=complex)
    directions = [eye[k] for k in range(n)]
    for j, k in itertools.combinations(range(n), 2):
        directions += [(eye[j] + eye[k]) / np.sqrt(2.0), (eye[j] + 1j * eye[k]) / np.sqrt(2.0)]
    return directions


def _locate_zero(f: HoloFunction, radius: float) -> Optional[np.ndarray]:
    """A zero of f inside ``radius``, preferring a regular point of the zero set."""
    first = _newton_zero(f, np.zeros(f.n, dtype=complex), radius)
    if first is None or _gradient_size(f, first) > REGULAR_GRADIENT:
        return first
    for direction in _candidate_directions(f.n):
        z = _newton_zero(f, first + ZERO_SEARCH_STEP * direction, radius)
        if z is not None and _gradient_size(f, z) > REGULAR_GRADIENT:
            return z
    return first


def _vanishing_order(f: HoloFunction, zero: np.ndarray, direction: np.ndarray) -> Optional[int]:
    """Order of lambda -> f(zero + lambda v) at 0; None when f vanishes along the whole line."""
    theta = 2.0 * np.pi * (np.arange(8) + 0.5) / 8
    sizes = []
    for radius in ORDER_RADII:
        points = zero + (radius * np.exp(1j * theta))[:, None] * direction
        sizes.append(float(np.mean(np.abs(f.evaluate(points)))))
    if min(sizes) <= VANISHING_FLOOR:
        return None
    return max(1, int(round(np.log(sizes[0] / sizes[1]) / np.log(ORDER_RADII[0] / ORDER_RADII[1]))))


def _transversal_direction(f: HoloFunction, zero: np.ndarray) -> Tuple[np.ndarray, int]:
    """A direction leaving the zero set at ``zero`` and the vanishing order of f along it."""
    grad = f.partials(zero)
    norm = float(np.sqrt(np.sum(np.abs(grad) ** 2)))
    if norm > REGULAR_GRADIENT:
        return np.conj(grad) / norm, 1
    orders = [(_vanishing_order(f, zero, v), k) for k, v in enumerate(_candidate_directions(f.n))]
    orders = [(order, k) for order, k in orders if order is not None]
    if not orders:
        raise NumericError("f vanishes along every trial direction", {"zero": zero.tolist(), "f": f.describe()})
    order, k = min(orders)
    return _candidate_directions(f.n)[k], order


def transversal_profile(f: HoloFunction, params: WeightParams, zero: np.ndarray, direction: np.ndarray,
                        reach: float):
    """Truncated integrals of the local integrand over the disk {zero + lambda v : eps <= |lambda| <= reach}.

    Near a zero the integrand behaves like a power of |lambda| in the direction
    transversal to the zero set, so this sequence diverges exactly when the
    integral over a neighbourhood of the zero does.
    """
    cutoffs = [reach * 2.0 ** -k for k in range(PROFILE_HALVINGS + 1)]
    x, w = roots_legendre(PROFILE_ORDER)
    theta = 2.0 * np.pi * (np.arange(PROFILE_ANGLES) + 0.5) / PROFILE_ANGLES
    measure = WeightedMeasure(f.n, params.alpha)
    bands = []
    for outer, inner in zip(cutoffs[:-1], cutoffs[1:]):
        s = np.log(inner) + 0.5 * np.log(outer / inner) * (1.0 + x)
        rho = np.exp(s)
        lam = rho[:, None] * np.exp(1j * theta)[None, :]
        points = zero + lam[..., None] * direction
        fields = derivative_fields(f, points.reshape(-1, f.n))
        with np.errstate(invalid="ignore"):
            values = (modulus_power(fields.modulus, params.p - params.q) * fields.invariant ** params.q
                      * measure.density(points.reshape(-1, f.n)))
        radial = np.mean(values.reshape(rho.size, theta.size), axis=1)
        # 2 rho^2 ds = 2 rho drho, the normalized area element of the disk
        bands.append(float(np.sum(0.5 * np.log(outer / inner) * w * 2.0 * rho ** 2 * radial)))
    if not np.all(np.isfinite(bands)):
        raise NumericError("Transversal bands are not finite",
                           {"zero": zero.tolist(), "direction": direction.tolist(), "bands": bands})
    truncated = np.cumsum(bands)
    return cutoffs[1:], truncated


def local_estimate_check(f: HoloFunction, params: WeightParams,
                         spec: QuadratureSpec = QuadratureSpec()) -> LocalEstimate:
    """int_{|z|<1/4} |f|^(p-q) |invariant grad f|^q dv_alpha over int_{|z|<3/4} |f|^p dv_alpha.

    At a zero of order m across the zero set the local integrand behaves like
    |lambda|^(mp-q) transversally, so it diverges from q = mp + 2 on.
    """
    measure = WeightedMeasure(f.n, params.alpha)

    def local(z):
        fields = derivative_fields(f, z)
        with np.errstate(invalid="ignore"):
            return modulus_power(fields.modulus, params.p - params.q) * fields.invariant ** params.q

    numerator = integrate_ball(local, measure, spec.replace(region=Region.euclidean_ball(INNER_RADIUS)))
    denominator = integrate_ball(lambda z: modulus_power(np.abs(f.evaluate(z)), params.p), measure,
                                 spec.replace(region=Region.euclidean_ball(OUTER_RADIUS)))
    growth, order, critical_q = None, None, None
    zero = _locate_zero(f, INNER_RADIUS)
    if zero is not None:
        direction, order = _transversal_direction(f, zero)
        critical_q = order * params.p + 2.0
        if params.q > params.p:
            reach = min(0.125, INNER_RADIUS - float(np.sqrt(squared_norm(zero))))
            cutoffs, truncated = transversal_profile(f, params, zero, direction, reach)
            growth = classify_growth(cutoffs, truncated)
            if growth.diverged:
                logger.info("local integral diverges near the zero %s of %s (%s)", zero.tolist(), f.describe(),
                            growth.classification)
                numerator = IntegralEstimate(numerator.value, numerator.stderr, numerator.samples_used,
                                             diverged=True, rejected=numerator.rejected)
    ratio = numerator.value / denominator.value if denominator.value > 0 else float("inf")
    return LocalEstimate(ratio, numerator, denominator, growth, order, critical_q)


def local_ratios(family: Sequence[HoloFunction], params: WeightParams, spec: QuadratureSpec = QuadratureSpec()):
    return [local_estimate_check(f, params, spec) for f in family]
