import numpy as np

from ..core.ball import as_point, require_interior
from ..core.errors import ParameterError, SingularityError
from ..core.holo_base import HoloFunction


class KernelPower(HoloFunction):
    """z -> scale * (1 - <z, a>)^(-s), principal branch."""

    def __init__(self, center, exponent: float, scale: complex = 1.0):
        center = as_point(center)
        require_interior(center, "a")
        if not exponent > 0:
            raise ParameterError(f"Kernel exponent must be positive, got s={exponent}")
        self.center = center
        self.exponent = float(exponent)
        self.scale = complex(scale)

    @property
    def n(self) -> int:
        return self.center.shape[-1]

    def _base(self, z):
        base = 1.0 - np.sum(z * np.conj(self.center), axis=-1)
        if np.any(base == 0):
            raise SingularityError(f"1 - <z, a> vanishes for a = {self.center.tolist()}")
        return base

    def evaluate(self, z):
        return self.scale * np.power(self._base(z), -self.exponent)

    def partials(self, z):
        base = self._base(z)
        factor = self.exponent * self.scale * np.power(base, -self.exponent - 1.0)
        return factor[..., None] * np.conj(self.center)

    def describe(self) -> str:
        coords = ",".join(_format(c) for c in self.center)
        return f"kernel n={self.n} a=({coords}) s={self.exponent!r} scale={_format(self.scale)}"

    def __repr__(self):
        return f"KernelPower({self.describe()!r})"


def _format(c: complex) -> str:
    c = complex(c)
    if c.imag == 0:
        return repr(c.real)
    return f"{c.real!r}{c.imag:+}i"
