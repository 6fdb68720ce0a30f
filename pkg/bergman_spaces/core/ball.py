"""Points of the unit ball of C^n and the Moebius geometry on it.

Points are numpy complex arrays whose last axis is the coordinate axis, so
every function here also accepts a batch of points of shape ``(..., n)``.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError, ParameterError


def as_point(z) -> np.ndarray:
    """Coerce a scalar, sequence or array to a complex array with a coordinate axis."""
    arr = np.asarray(z, dtype=complex)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    return arr


def squared_norm(z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    return np.sum(z.real ** 2 + z.imag ** 2, axis=-1)


def check_dimensions(*points):
    dims = {p.shape[-1] for p in points}
    if len(dims) > 1:
        raise DimensionError(f"Dimension mismatch between arguments: {sorted(dims)}")


def require_interior(z, name="z"):
    norms = squared_norm(z)
    if np.any(norms >= 1.0):
        raise DomainError(
            f"{name} must lie in the open unit ball, got |{name}| = {np.sqrt(np.max(norms)):.17g}"
        )


def hermitian_inner(z, w):
    """Return sum_k z_k conj(w_k); a complex scalar for single points."""
    z, w = as_point(z), as_point(w)
    check_dimensions(z, w)
    result = np.sum(z * np.conj(w), axis=-1)
    return complex(result) if np.ndim(result) == 0 else result


def involution_map(a: np.ndarray, z: np.ndarray) -> np.ndarray:
    """phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z, a>) without domain checks.

    phi_0 is the map z -> -z.
    """
    a2 = float(squared_norm(a))
    if a2 == 0.0:
        return -z
    za = np.sum(z * np.conj(a), axis=-1)
    projection = (za / a2)[..., None] * a
    s = np.sqrt(1.0 - a2)
    return (a - projection - s * (z - projection)) / (1.0 - za)[..., None]


def involution_apply(a, z) -> np.ndarray:
    a, z = as_point(a), as_point(z)
    check_dimensions(a, z)
    require_interior(a, "a")
    require_interior(z, "z")
    return involution_map(a, z)


def one_minus_sq_identity(a, z):
    """(1-|a|^2)(1-|z|^2)/|1-<z,a>|^2, which equals 1 - |phi_a(z)|^2."""
    a, z = as_point(a), as_point(z)
    check_dimensions(a, z)
    require_interior(a, "a")
    require_interior(z, "z")
    za = np.sum(z * np.conj(a), axis=-1)
    value = (1.0 - squared_norm(a)) * (1.0 - squared_norm(z)) / np.abs(1.0 - za) ** 2
    return float(value) if np.ndim(value) == 0 else value


def pseudo_hyperbolic_distance(z, w):
    """|phi_z(w)|; symmetric in its arguments."""
    z, w = as_point(z), as_point(w)
    check_dimensions(z, w)
    require_interior(z, "z")
    require_interior(w, "w")
    distance = np.sqrt(squared_norm(involution_map(z, w)))
    return float(distance) if np.ndim(distance) == 0 else distance


def check_radius(rho):
    if not 0.0 < rho < 1.0:
        raise ParameterError(f"Pseudo-hyperbolic radius must lie in (0, 1), got {rho}")


def in_pseudo_ball(center, rho, w):
    check_radius(rho)
    inside = np.asarray(pseudo_hyperbolic_distance(center, w)) < rho
    return bool(inside) if inside.ndim == 0 else inside


def real_jacobian(a, w):
    """Real Jacobian determinant of phi_a at w."""
    a, w = as_point(a), as_point(w)
    check_dimensions(a, w)
    n = a.shape[-1]
    wa = np.sum(w * np.conj(a), axis=-1)
    return ((1.0 - squared_norm(a)) / np.abs(1.0 - wa) ** 2) ** (n + 1)


def invariant_density(w):
    """Density (1-|w|^2)^-(n+1) of the Moebius-invariant measure tau."""
    w = as_point(w)
    require_interior(w, "w")
    value = (1.0 - squared_norm(w)) ** (-(w.shape[-1] + 1))
    return float(value) if np.ndim(value) == 0 else value


@dataclass(frozen=True)
class PseudoHyperbolicBall:
    """D(center, radius) = {w : |phi_center(w)| < radius}."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        center = as_point(self.center)
        if center.ndim != 1:
            raise DimensionError("A pseudo-hyperbolic ball needs a single center point")
        require_interior(center, "center")
        check_radius(self.radius)
        object.__setattr__(self, "center", center)

    @property
    def n(self) -> int:
        return self.center.shape[-1]

    def contains(self, w):
        return in_pseudo_ball(self.center, self.radius, w)

    def radial_window(self):
        """Bounds on |w| over the ball, from (|a|-|w|)/(1-|a||w|) <= |phi_a(w)| <= (|a|+|w|)/(1+|a||w|)."""
        r = float(np.sqrt(squared_norm(self.center)))
        rho = self.radius
        low = max(0.0, (r - rho) / (1.0 - rho * r))
        high = (r + rho) / (1.0 + rho * r)
        return low, high

    def exact_volume(self) -> float:
        a2 = float(squared_norm(self.center))
        rho2 = self.radius ** 2
        return rho2 ** self.n * ((1.0 - a2) / (1.0 - rho2 * a2)) ** (self.n + 1)

    def exact_tau_mass(self) -> float:
        rho2 = self.radius ** 2
        return (rho2 / (1.0 - rho2)) ** self.n
