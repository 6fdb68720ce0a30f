"""Functions built from other functions: compositions, sums and multiples."""
from typing import Callable, Iterable, Optional

import numpy as np

from ..core.automorphism import Automorphism
from ..core.ball import squared_norm
from ..core.errors import DimensionError, NumericError
from ..core.holo_base import HoloFunction

STEP_SCALE = np.finfo(float).eps ** (1.0 / 3.0)


def difference_step(z: np.ndarray) -> np.ndarray:
    """Real step eps^(1/3) * (1 + |z|), one per point."""
    return STEP_SCALE * (1.0 + np.sqrt(squared_norm(z)))


def central_partials(fn: Callable[[np.ndarray], np.ndarray], z: np.ndarray,
                     step: Optional[float] = None) -> np.ndarray:
    """Central differences along each complex coordinate.

    For holomorphic fn the derivative along the real direction e_k equals the
    complex partial d/dz_k.
    """
    h = difference_step(z) if step is None else np.full(z.shape[:-1], float(step))
    n = z.shape[-1]
    out = np.empty(z.shape, dtype=complex)
    for k in range(n):
        shift = np.zeros(z.shape, dtype=complex)
        shift[..., k] = h
        out[..., k] = (fn(z + shift) - fn(z - shift)) / (2.0 * h)
    if not np.all(np.isfinite(out)):
        raise NumericError(
            "Central differences produced non-finite partials",
            {"step": float(np.max(h)), "points": int(np.size(h)), "bad": int(np.sum(~np.isfinite(out)))},
        )
    return out


class Composed(HoloFunction):
    """z -> outer(inner(z)); partials are always numeric."""

    def __init__(self, inner: Automorphism, outer: HoloFunction):
        if inner.n != outer.n:
            raise DimensionError(f"Cannot compose a map of dimension {inner.n} with a function of {outer.n} variables")
        self.inner = inner
        self.outer = outer

    @property
    def n(self) -> int:
        return self.outer.n

    def evaluate(self, z):
        return self.outer.evaluate(self.inner.apply(z))

    def partials(self, z):
        return central_partials(self.evaluate, z)

    def describe(self) -> str:
        return f"({self.outer.describe()}) o {self.inner!r}"


class Sum(HoloFunction):
    def __init__(self, terms: Iterable[HoloFunction]):
        terms = list(terms)
        if not terms:
            raise DimensionError("A sum needs at least one term")
        dims = {t.n for t in terms}
        if len(dims) != 1:
            raise DimensionError(f"Cannot add functions of dimensions {sorted(dims)}")
        self.terms = terms

    @property
    def n(self) -> int:
        return self.terms[0].n

    def evaluate(self, z):
        return sum(t.evaluate(z) for t in self.terms)

    def partials(self, z):
        return sum(t.partials(z) for t in self.terms)

    def describe(self) -> str:
        return " + ".join(f"({t.describe()})" for t in self.terms)


class Scaled(HoloFunction):
    def __init__(self, function: HoloFunction, factor: complex):
        self.function = function
        self.factor = complex(factor)

    @property
    def n(self) -> int:
        return self.function.n

    def evaluate(self, z):
        return self.factor * self.function.evaluate(z)

    def partials(self, z):
        return self.factor * self.function.partials(z)

    def describe(self) -> str:
        return f"{self.factor!r} * ({self.function.describe()})"
