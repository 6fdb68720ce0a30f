"""Bergman kernels, the Forelli-Rudin ratio, the operators T_{a,b} and the kernel H."""
import logging
import warnings
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.integrate import IntegrationWarning, quad
from scipy.special import gammaln, hyp2f1, roots_jacobi, roots_legendre

from ..core.ball import as_point, check_dimensions, hermitian_inner, require_interior, squared_norm
from ..core.errors import NumericError, ParameterError, SingularityError
from ..core.holo_base import HoloFunction
from ..core.params import QuadratureSpec
from ..quadrature.measures import WeightedMeasure, normalizing_constant
from ..quadrature.rules import integrate_ball, integrate_ball_many, radial_rule

logger = logging.getLogger(__name__)

TAIL_TOLERANCE = 1e-3
GROWTH_SLOPE = 0.25
PROBE_ORDER = 64
IMAGE_CHECK_U = 0.04


@dataclass(frozen=True)
class KernelParams:
    a: float = 0.0
    b: float = 0.0
    alpha: float = 0.0
    t: float = 1.0
    beta: int = 1

    def __post_init__(self):
        if self.alpha <= -1:
            raise ParameterError(f"alpha must exceed -1, got {self.alpha}")
        if self.t <= 0:
            raise ParameterError(f"t must be positive, got {self.t}")
        if int(self.beta) != self.beta or self.beta < 1:
            raise ParameterError(f"beta must be a positive integer, got {self.beta}")

    def gamma(self, q: float, n: int) -> float:
        """gamma with beta = (n+1+gamma)/q - (n+1)."""
        return q * (n + 1 + self.beta) - (n + 1)

    def bounded(self, p: float) -> bool:
        return criterion_holds(self.a, self.b, p, self.alpha)


def bergman_kernel(z, w, s: float):
    """(1 - <z, w>)^(-s), principal branch."""
    z, w = as_point(z), as_point(w)
    check_dimensions(z, w)
    base = 1.0 - np.sum(z * np.conj(w), axis=-1)
    if np.any(np.abs(base) == 0):
        raise SingularityError("Kernel base 1 - <z, w> vanishes")
    value = np.power(base, -s)
    return complex(value) if np.ndim(value) == 0 else value


def reproducing_residual(f: HoloFunction, z, alpha: float, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """|f(z) - int f(w) (1 - <z, w>)^-(n+1+alpha) dv_alpha(w)|."""
    z = as_point(z)
    require_interior(z)
    n = f.n
    exponent = n + 1 + alpha

    def integrand(w):
        values = f.evaluate(w) * np.power(1.0 - np.conj(w) @ z, -exponent)
        return np.stack([values.real, values.imag], axis=-1)

    real, imag = integrate_ball_many(integrand, WeightedMeasure(n, alpha), spec)
    return abs(f(z) - complex(real.value, imag.value))


def forelli_rudin_ratio(z, alpha: float, t: float, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """(1-|z|^2)^t int dv_alpha(w) / |1 - <z, w>|^(n+1+alpha+t).

    Substituting w = phi_z(x) turns the ratio into int |1 - <x, z>|^-(n+1+alpha-t) dv_alpha(x),
    which concentrates the sampling near z/|z|.  The deterministic rule then
    pushes dv_alpha forward to the disk under x -> <x, z/|z|>, giving the
    measure (n+alpha)(1-|w|^2)^(n-1+alpha) dA/pi.
    """
    z = as_point(z)
    require_interior(z)
    if t <= 0:
        raise ParameterError(f"t must be positive, got {t}")
    n = z.shape[-1]
    kappa = n + 1 + alpha - t
    if spec.method != "product-rule":
        return integrate_ball(lambda x: np.abs(1.0 - x @ np.conj(z)) ** -kappa, WeightedMeasure(n, alpha), spec).value
    r = float(np.sqrt(squared_norm(z)))
    u, weights = radial_rule(1, n - 1 + alpha, spec.slice_order)
    theta = 2.0 * np.pi * (np.arange(spec.slice_angles) + 0.5) / spec.slice_angles
    points = r * np.sqrt(u)[:, None] * np.exp(1j * theta)[None, :]
    averages = np.mean(np.abs(1.0 - points) ** -kappa, axis=1)
    return float(np.sum(weights * averages))


def forelli_rudin_exact(radius: float, n: int, alpha: float, t: float) -> float:
    kappa = n + 1 + alpha - t
    return float(hyp2f1(kappa / 2.0, kappa / 2.0, n + 1 + alpha, radius ** 2))


def forelli_rudin_supremum(n: int, alpha: float, t: float) -> float:
    """Limit of the ratio as |z| -> 1."""
    c = n + 1 + alpha
    return float(np.exp(gammaln(c) + gammaln(t) - 2.0 * gammaln((c + t) / 2.0)))


def apply_T(a: float, b: float, g: Callable[[np.ndarray], np.ndarray], z,
            spec: QuadratureSpec = QuadratureSpec()) -> float:
    """(1-|z|^2)^a int (1-|w|^2)^b g(w) / |1 - <z, w>|^(n+1+a+b) dv(w).

    The factor (1-|w|^2)^b is absorbed into the measure dv_b.
    """
    if b <= -1:
        raise ParameterError(f"b must exceed -1 for the integral to be sampled, got {b}")
    z = as_point(z)
    require_interior(z)
    n = z.shape[-1]
    measure = WeightedMeasure(n, b)
    exponent = n + 1 + a + b

    def integrand(w):
        return np.asarray(g(w), dtype=float) * np.abs(1.0 - w @ np.conj(z)) ** -exponent

    integral = integrate_ball(integrand, measure, spec).value / measure.c_alpha
    return (1.0 - float(squared_norm(z))) ** a * integral


def witness(c: float):
    """g_c(w) = (1-|w|^2)^-c."""
    return lambda w: (1.0 - squared_norm(w)) ** -c


def log_witness_image(a: float, b: float, c: float, n: int, gap: np.ndarray) -> np.ndarray:
    """log of T_{a,b} g_c at |z|^2 = 1 - gap.

    T g_c = (1-u)^a / c_{b-c} * 2F1(A, A; C; u) with A = (n+1+a+b)/2 and
    C = n+1+b-c; for a + c > 0 the Euler transform moves the growth
    (1-u)^-(a+c) out of the hypergeometric factor.
    """
    beta = b - c
    if beta <= -1:
        return np.full(np.shape(gap), np.inf)
    gap = np.asarray(gap, dtype=float)
    u = 1.0 - gap
    big_a = (n + 1 + a + b) / 2.0
    big_c = n + 1 + beta
    if a + c > 0:
        log_f = -(a + c) * np.log(gap) + np.log(hyp2f1(big_c - big_a, big_c - big_a, big_c, u))
    else:
        log_f = np.log(hyp2f1(big_a, big_a, big_c, u))
    return a * np.log(gap) - np.log(normalizing_constant(n, beta)) + log_f


def criterion_holds(a: float, b: float, p: float, alpha: float) -> bool:
    """-pa < alpha + 1 < p(b + 1)."""
    return -p * a < alpha + 1 < p * (b + 1)


@dataclass
class ProbeResult:
    a: float
    b: float
    p: float
    alpha: float
    predicted: str
    observed: str
    exponents: List[float] = field(default_factory=list)
    ratios: List[float] = field(default_factory=list)
    slope: float = 0.0
    image_error: float = float("nan")   # closed-form witness image against quadrature

    @property
    def consistent(self) -> bool:
        return self.predicted == self.observed

    @property
    def max_ratio(self) -> float:
        return max(self.ratios) if self.ratios else float("nan")


def _tail_exponent(a, b, c, n, p, alpha) -> float:
    """Fitted exponent e of |T g_c|^p (1-u)^alpha ~ (1-u)^e as u -> 1."""
    gap = 2.0 ** -np.arange(10, 22, 2)
    logs = alpha * np.log(gap) + p * log_witness_image(a, b, c, n, gap)
    return float(np.polyfit(np.log(gap), logs, 1)[0])


def _witness_ratio(a, b, c, n, p, alpha) -> float:
    """||T g_c||_p / ||g_c||_p in L^p(dv_alpha), or inf when T g_c is not p-integrable."""
    if b - c <= -1:
        return float("inf")
    if _tail_exponent(a, b, c, n, p, alpha) <= -1.0 + TAIL_TOLERANCE:
        return float("inf")
    shift = max(c, -a)
    exponent = alpha - p * shift
    if exponent <= -1.0:
        return float("inf")
    x, w = roots_jacobi(PROBE_ORDER, exponent, n - 1)
    gap = 0.5 * (1.0 - x)
    smooth = np.exp(p * (log_witness_image(a, b, c, n, gap) + shift * np.log(gap)))
    image_norm = normalizing_constant(n, alpha) * n * 2.0 ** -(exponent + n) * np.sum(w * smooth)
    witness_norm = normalizing_constant(n, alpha) / normalizing_constant(n, alpha - c * p)
    return float((image_norm / witness_norm) ** (1.0 / p))


def quadrature_witness_image(a: float, b: float, c: float, n: int, u: float,
                             spec: QuadratureSpec = QuadratureSpec()) -> float:
    """T_{a,b} g_c at |z|^2 = u by quadrature, with (1-|w|^2)^(b-c) absorbed into dv_{b-c}."""
    if b - c <= -1:
        raise ParameterError(f"b - c must exceed -1 for T g_c to be finite, got {b - c}")
    z = np.zeros(n, dtype=complex)
    z[0] = np.sqrt(u)
    measure = WeightedMeasure(n, b - c)
    exponent = n + 1 + a + b
    integral = integrate_ball(lambda w: np.abs(1.0 - w @ np.conj(z)) ** -exponent, measure, spec).value
    return (1.0 - u) ** a * integral / measure.c_alpha


def _image_error(a, b, exponents, n, spec) -> float:
    errors = []
    for c in exponents:
        if b - c <= -1:
            continue
        closed = float(np.exp(log_witness_image(a, b, c, n, np.array([1.0 - IMAGE_CHECK_U]))[0]))
        numeric = quadrature_witness_image(a, b, c, n, IMAGE_CHECK_U, spec)
        errors.append(abs(numeric - closed) / closed)
    return max(errors) if errors else float("nan")


def operator_bound_probe(a: float, b: float, p: float, alpha: float, n: int = 1,
                         witnesses: int = 6, spec: Optional[QuadratureSpec] = None) -> ProbeResult:
    """Watch ||T g_c|| / ||g_c|| as c increases to (alpha+1)/p.

    Bounded ratios are consistent with boundedness of T on L^p(dv_alpha);
    infinite or growing ratios are the unboundedness signal.
    When ``spec`` is given, the closed-form images the ratios are built from are
    checked against quadrature of T g_c at |z|^2 = IMAGE_CHECK_U.
    """
    if p < 1:
        raise ParameterError(f"The probe needs p >= 1, got {p}")
    limit = (alpha + 1.0) / p
    exponents = [limit * (1.0 - 2.0 ** -j) for j in range(1, witnesses + 1)]
    ratios = [_witness_ratio(a, b, c, n, p, alpha) for c in exponents]
    predicted = "bounded-consistent" if criterion_holds(a, b, p, alpha) else "growth-detected"
    finite = [(limit - c, r) for c, r in zip(exponents, ratios) if np.isfinite(r)]
    slope = 0.0
    if len(finite) >= 3:
        gaps, values = zip(*finite[-3:])
        slope = float(np.polyfit(np.log(1.0 / np.array(gaps)), np.log(values), 1)[0])
    grows = any(not np.isfinite(r) for r in ratios) or slope > GROWTH_SLOPE
    observed = "growth-detected" if grows else "bounded-consistent"
    image_error = float("nan") if spec is None else _image_error(a, b, exponents, n, spec)
    result = ProbeResult(a, b, p, alpha, predicted, observed, exponents, ratios, slope, image_error)
    if not result.consistent:
        logger.warning("probe at a=%g b=%g p=%g alpha=%g observed %s, criterion predicts %s",
                       a, b, p, alpha, observed, predicted)
    return result


def straddling_grid(alpha: float = 0.0) -> List[Tuple[float, float, float]]:
    """(a, b, p) points on, inside and outside both sides of -pa < alpha+1 < p(b+1)."""
    grid = []
    for p in (1.0, 2.0):
        limit = (alpha + 1.0) / p
        for a in (0.0, -limit, -limit - 0.5):
            for b in (limit, limit - 1.0, (limit - 2.0) / 2.0):
                grid.append((a, b, p))
    return grid


def _quad_part(fn, lo, hi, limit):
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        return quad(fn, lo, hi, limit=limit)[0]


def _half_line_integral(fn, context) -> float:
    for limit in (100, 1000):
        try:
            return _quad_part(fn, 0.0, 1.0, limit) + _quad_part(fn, 1.0, np.inf, limit)
        except IntegrationWarning as e:
            logger.debug("refining quadrature with limit %d: %s", limit * 10, e)
    raise NumericError("Quadrature of H did not converge", context)


def H_kernel(z, w, beta: int, p: float, q: float, spec: QuadratureSpec = QuadratureSpec()) -> Tuple[complex, float]:
    """(p/q) int_0^1 [1 - (1-tx)^N] / (t (1-tx)^N) dt with x = <z, w> and N = n+1+beta.

    The product rule uses spec.slice_order Gauss-Legendre nodes in t; the other
    methods integrate int_0^inf [(1 - x e^-s)^-N - 1] ds (t = exp(-s)) adaptively.
    Returns H together with |H| |1-x|^(n+beta).
    """
    if int(beta) != beta or beta < 1:
        raise ParameterError(f"beta must be a positive integer, got {beta}")
    if p <= 0 or q <= 0:
        raise ParameterError(f"p and q must be positive, got {p}, {q}")
    z, w = as_point(z), as_point(w)
    check_dimensions(z, w)
    require_interior(z, "z")
    require_interior(w, "w")
    n = z.shape[-1]
    x = complex(hermitian_inner(z, w))
    power = n + 1 + beta
    if spec.method == "product-rule":
        t, weights = roots_legendre(spec.slice_order)
        t = 0.5 * (t + 1.0)
        integral = complex(np.sum(0.5 * weights * ((1.0 - x * t) ** -power - 1.0) / t))
        value = (p / q) * integral
        return value, abs(value) * abs(1.0 - x) ** (n + beta)

    def integrand(s):
        return (1.0 - x * np.exp(-s)) ** -power - 1.0

    context = {"x": x, "beta": beta}
    real = _half_line_integral(lambda s: integrand(s).real, context)
    imag = _half_line_integral(lambda s: integrand(s).imag, context)
    value = (p / q) * complex(real, imag)
    return value, abs(value) * abs(1.0 - x) ** (n + beta)


def H_kernel_exact(x: complex, n: int, beta: int, p: float, q: float) -> complex:
    """Closed form -log(1-x) + sum_{k=1}^{n+beta} ((1-x)^-k - 1)/k, times p/q."""
    if int(beta) != beta or beta < 1:
        raise ParameterError(f"beta must be a positive integer, got {beta}")
    base = 1.0 - complex(x)
    total = -np.log(base) + sum((base ** -k - 1.0) / k for k in range(1, n + int(beta) + 1))
    return (p / q) * complex(total)
