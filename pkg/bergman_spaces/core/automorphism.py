from abc import ABC, abstractmethod

import numpy as np
from scipy.stats import unitary_group

from .ball import as_point, check_dimensions, involution_map, require_interior
from .errors import DimensionError, ParameterError


class Automorphism(ABC):
    """Biholomorphic self-map of the unit ball."""

    @property
    @abstractmethod
    def n(self) -> int:
        """Dimension of the ball the map acts on."""

    @abstractmethod
    def apply(self, z: np.ndarray) -> np.ndarray:
        """Map a point or a batch of points (last axis = coordinates)."""

    def __call__(self, z):
        z = as_point(z)
        if z.shape[-1] != self.n:
            raise DimensionError(f"Automorphism of dimension {self.n} applied to a point of dimension {z.shape[-1]}")
        return self.apply(z)

    def then(self, other: "Automorphism") -> "ChainedAutomorphism":
        """The map z -> other(self(z))."""
        return ChainedAutomorphism(self, other)


class Involution(Automorphism):
    """The symmetry phi_a exchanging 0 and a."""

    def __init__(self, center):
        center = as_point(center)
        require_interior(center, "a")
        self.center = center

    @property
    def n(self) -> int:
        return self.center.shape[-1]

    def apply(self, z):
        return involution_map(self.center, z)

    def __repr__(self):
        return f"Involution(center={self.center.tolist()})"


class UnitaryMap(Automorphism):
    """z -> U z for a unitary matrix U."""

    def __init__(self, matrix, atol=1e-10):
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionError(f"Unitary map needs a square matrix, got shape {matrix.shape}")
        if not np.allclose(matrix.conj().T @ matrix, np.eye(matrix.shape[0]), atol=atol):
            raise ParameterError("Matrix is not unitary")
        self.matrix = matrix

    @classmethod
    def random(cls, n, rng=None):
        if n == 1:
            generator = np.random.default_rng(rng)
            return cls(np.exp(2j * np.pi * generator.random()).reshape(1, 1))
        return cls(unitary_group.rvs(n, random_state=rng))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def apply(self, z):
        return z @ self.matrix.T

    def __repr__(self):
        return f"UnitaryMap(n={self.n})"


class ChainedAutomorphism(Automorphism):
    def __init__(self, first: Automorphism, second: Automorphism):
        if first.n != second.n:
            raise DimensionError(f"Cannot chain automorphisms of dimensions {first.n} and {second.n}")
        self.first = first
        self.second = second

    @property
    def n(self) -> int:
        return self.first.n

    def apply(self, z):
        return self.second.apply(self.first.apply(z))

    def __repr__(self):
        return f"{self.first!r} then {self.second!r}"


def involution_round_trip_error(a, z) -> float:
    """max |phi_a(phi_a(z)) - z| over a batch."""
    a, z = as_point(a), as_point(z)
    check_dimensions(a, z)
    back = involution_map(a, involution_map(a, z))
    return float(np.max(np.abs(back - z)))
