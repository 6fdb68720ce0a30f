"""Radial derivative, complex gradient and invariant gradient of holomorphic functions."""
import logging
from dataclasses import dataclass

import numpy as np

from ..core.automorphism import Involution
from ..core.ball import as_point, require_interior, squared_norm
from ..core.errors import NumericError
from ..core.holo_base import HoloFunction
from .composed import Composed

logger = logging.getLogger(__name__)

RADICAND_TOLERANCE = 1e-12


@dataclass(frozen=True)
class DerivativeBundle:
    value: complex
    partials: np.ndarray
    radial: complex
    grad_norm: float
    inv_grad_norm: float


@dataclass(frozen=True)
class DerivativeFields:
    """Derivative data over a batch of points, as arrays."""

    modulus: np.ndarray           # |f|
    radial: np.ndarray            # |Rf|
    gradient: np.ndarray          # |grad f|
    invariant: np.ndarray         # |invariant grad f|
    one_minus_sq: np.ndarray      # 1 - |z|^2
    partials: np.ndarray          # (..., n) complex


def _invariant_from_identity(one_minus_sq, grad_sq, radial_sq):
    radicand = one_minus_sq * (grad_sq - radial_sq)
    floor = -RADICAND_TOLERANCE * (1.0 + grad_sq)
    if np.any(radicand < floor):
        worst = float(np.min(radicand / (1.0 + grad_sq)))
        raise NumericError(
            "Negative radicand in the invariant gradient identity",
            {"relative_radicand": worst},
        )
    return np.sqrt(np.maximum(radicand, 0.0))


def derivative_fields(f: HoloFunction, points: np.ndarray) -> DerivativeFields:
    points = as_point(points)
    values = f.evaluate(points)
    partials = f.partials(points)
    radial = np.sum(points * partials, axis=-1)
    grad_sq = np.sum(partials.real ** 2 + partials.imag ** 2, axis=-1)
    radial_sq = radial.real ** 2 + radial.imag ** 2
    one_minus_sq = 1.0 - squared_norm(points)
    return DerivativeFields(
        modulus=np.abs(values),
        radial=np.sqrt(radial_sq),
        gradient=np.sqrt(grad_sq),
        invariant=_invariant_from_identity(one_minus_sq, grad_sq, radial_sq),
        one_minus_sq=one_minus_sq,
        partials=partials,
    )


def derivative_bundle(f: HoloFunction, z) -> DerivativeBundle:
    z = f.check_points(z)
    require_interior(z)
    partials = f.partials(z)
    radial = complex(np.sum(z * partials))
    grad_sq = float(np.sum(np.abs(partials) ** 2))
    inv = _invariant_from_identity(1.0 - float(squared_norm(z)), grad_sq, abs(radial) ** 2)
    return DerivativeBundle(
        value=complex(f.evaluate(z)),
        partials=partials,
        radial=radial,
        grad_norm=float(np.sqrt(grad_sq)),
        inv_grad_norm=float(inv),
    )


def radial_derivative(f: HoloFunction, z):
    """Rf(z) = sum_k z_k df/dz_k(z)."""
    z = f.check_points(z)
    result = np.sum(z * f.partials(z), axis=-1)
    return complex(result) if np.ndim(result) == 0 else result


def gradient_norm(f: HoloFunction, z):
    z = f.check_points(z)
    result = np.sqrt(np.sum(np.abs(f.partials(z)) ** 2, axis=-1))
    return float(result) if np.ndim(result) == 0 else result


def invariant_gradient_norm(f: HoloFunction, z):
    """|invariant grad f|^2 = (1-|z|^2)(|grad f|^2 - |Rf|^2)."""
    z = f.check_points(z)
    require_interior(z)
    partials = f.partials(z)
    radial = np.sum(z * partials, axis=-1)
    result = _invariant_from_identity(
        1.0 - squared_norm(z),
        np.sum(np.abs(partials) ** 2, axis=-1),
        np.abs(radial) ** 2,
    )
    return float(result) if np.ndim(result) == 0 else result


def invariant_gradient_definitional(f: HoloFunction, z) -> float:
    """|grad (f o phi_z)(0)| from numeric partials of the composition."""
    z = f.check_points(z)
    require_interior(z)
    if z.ndim != 1:
        return np.array([invariant_gradient_definitional(f, point) for point in z.reshape(-1, f.n)]).reshape(z.shape[:-1])
    composed = Composed(Involution(z), f)
    origin = np.zeros(f.n, dtype=complex)
    try:
        partials = composed.partials(origin)
    except NumericError as e:
        e.diagnostics["point"] = z.tolist()
        raise
    return float(np.sqrt(np.sum(np.abs(partials) ** 2)))


def chain_violations(f: HoloFunction, points, slack=1e-9) -> int:
    """Count points breaking (1-|z|^2)|Rf| <= (1-|z|^2)|grad f| <= |inv grad f| <= |grad f|."""
    fields = derivative_fields(f, points)
    weighted_radial = fields.one_minus_sq * fields.radial
    weighted_gradient = fields.one_minus_sq * fields.gradient
    broken = (
        (weighted_radial > weighted_gradient + slack)
        | (weighted_gradient > fields.invariant + slack)
        | (fields.invariant > fields.gradient + slack)
    )
    count = int(np.sum(broken))
    if count:
        logger.warning("%d of %d points violate the gradient chain for %s", count, broken.size, f.describe())
    return count
