from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import DimensionError, ParameterError
from ..core.holo_base import HoloFunction

MultiIndex = Tuple[int, ...]


def _monomial_values(z: np.ndarray, index: MultiIndex, powers) -> np.ndarray:
    out = np.ones(z.shape[:-1], dtype=complex)
    for k, m in enumerate(index):
        if m:
            out = out * powers[k][m]
    return out


def _power_table(z: np.ndarray, degree: int):
    """powers[k][j] = z_k ** j by repeated multiplication (0 ** 0 == 1)."""
    table = []
    for k in range(z.shape[-1]):
        column = [np.ones(z.shape[:-1], dtype=complex)]
        for _ in range(degree):
            column.append(column[-1] * z[..., k])
        table.append(column)
    return table


class Polynomial(HoloFunction):
    """sum_m c_m z^m over finitely many multi-indices m."""

    def __init__(self, coefficients: Mapping[Sequence[int], complex], n: Optional[int] = None):
        terms: Dict[MultiIndex, complex] = {}
        for index, coefficient in coefficients.items():
            index = tuple(int(m) for m in index)
            if any(m < 0 for m in index):
                raise ParameterError(f"Multi-index entries must be nonnegative, got {index}")
            if n is None:
                n = len(index)
            if len(index) != n:
                raise DimensionError(f"Multi-index {index} does not have {n} entries")
            coefficient = complex(coefficient)
            if coefficient != 0:
                terms[index] = terms.get(index, 0) + coefficient
        if n is None:
            raise DimensionError("The zero polynomial needs an explicit dimension")
        self._n = int(n)
        self.coefficients = {m: c for m, c in sorted(terms.items()) if c != 0}
        self._derivatives = None

    @classmethod
    def constant(cls, value, n):
        return cls({(0,) * n: value}, n)

    @classmethod
    def monomial(cls, index, coefficient=1.0):
        return cls({tuple(index): coefficient})

    @classmethod
    def coordinate(cls, k, n):
        """The function z -> z_k (k counted from 0)."""
        index = [0] * n
        index[k] = 1
        return cls({tuple(index): 1.0})

    @property
    def n(self) -> int:
        return self._n

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.coefficients), default=0)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.coefficients}) <= 1

    def derivative(self, k: int) -> "Polynomial":
        if self._derivatives is None:
            derived = []
            for j in range(self._n):
                terms = {}
                for m, c in self.coefficients.items():
                    if m[j]:
                        shifted = list(m)
                        shifted[j] -= 1
                        terms[tuple(shifted)] = c * m[j]
                derived.append(Polynomial(terms, self._n))
            self._derivatives = derived
        return self._derivatives[k]

    def evaluate(self, z):
        powers = _power_table(z, self.degree)
        out = np.zeros(z.shape[:-1], dtype=complex)
        for index, coefficient in self.coefficients.items():
            out = out + coefficient * _monomial_values(z, index, powers)
        return out

    def partials(self, z):
        return np.stack([self.derivative(k).evaluate(z) for k in range(self._n)], axis=-1)

    def describe(self) -> str:
        body = ", ".join(
            f"({','.join(str(m) for m in index)}{',' if len(index) == 1 else ''}):{_format_coefficient(c)}"
            for index, c in self.coefficients.items()
        )
        return f"poly n={self._n} {{{body}}}"

    def __repr__(self):
        return f"Polynomial({self.describe()!r})"


def _format_coefficient(c: complex) -> str:
    if c.imag == 0:
        return repr(c.real)
    if c.real == 0:
        return f"{c.imag!r}i"
    return f"{c.real!r}{c.imag:+}i"
