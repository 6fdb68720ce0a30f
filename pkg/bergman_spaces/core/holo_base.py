from abc import ABC, abstractmethod

import numpy as np

from .ball import as_point, squared_norm
from .errors import DimensionError, DomainError

CLOSED_BALL_SLACK = 1e-12


class HoloFunction(ABC):
    """A holomorphic function on the unit ball of C^n.

    ``evaluate`` and ``partials`` are vectorized: they take an array of shape
    ``(..., n)`` and return shapes ``(...)`` and ``(..., n)``.
    """

    @property
    @abstractmethod
    def n(self) -> int:
        """Dimension of the domain"""
        pass

    @abstractmethod
    def evaluate(self, z: np.ndarray) -> np.ndarray:
        """Values at a batch of points"""
        pass

    @abstractmethod
    def partials(self, z: np.ndarray) -> np.ndarray:
        """Holomorphic partial derivatives at a batch of points"""
        pass

    def describe(self) -> str:
        return repr(self)

    def check_points(self, z) -> np.ndarray:
        z = as_point(z)
        if z.shape[-1] != self.n:
            raise DimensionError(f"Function of {self.n} variables evaluated at a point of dimension {z.shape[-1]}")
        if np.any(squared_norm(z) > 1.0 + CLOSED_BALL_SLACK):
            raise DomainError("Evaluation point lies outside the closed unit ball")
        return z

    def __call__(self, z):
        value = self.evaluate(self.check_points(z))
        return complex(value) if np.ndim(value) == 0 else value

    def gradient(self, z):
        return self.partials(self.check_points(z))

    def compose(self, automorphism):
        """The function z -> self(automorphism(z))."""
        from ..functions.composed import Composed
        return Composed(automorphism, self)

    def __add__(self, other):
        from ..functions.composed import Sum
        if not isinstance(other, HoloFunction):
            return NotImplemented
        return Sum([self, other])

    def __mul__(self, factor):
        from ..functions.composed import Scaled
        if isinstance(factor, HoloFunction):
            return NotImplemented
        return Scaled(self, complex(factor))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0
