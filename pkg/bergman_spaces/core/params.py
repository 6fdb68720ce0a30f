from dataclasses import asdict, dataclass, field, replace
from typing import Literal, Mapping, Optional, Tuple

import numpy as np

from .errors import ParameterError

REGION_KINDS = ("full-ball", "euclidean-ball", "pseudo-ball", "annulus")
METHODS = ("product-rule", "monte-carlo", "stratified-mc")


@dataclass(frozen=True)
class WeightParams:
    p: float
    q: float
    alpha: float = 0.0
    n: int = 1

    def __post_init__(self):
        if self.p <= 0 or self.q <= 0:
            raise ParameterError(f"Exponents must be positive, got p={self.p}, q={self.q}")
        if self.alpha <= -1:
            raise ParameterError(f"Weight exponent must exceed -1, got alpha={self.alpha}")
        if int(self.n) != self.n or self.n < 1:
            raise ParameterError(f"Dimension must be a positive integer, got n={self.n}")

    @property
    def in_range(self) -> bool:
        """True when 0 < q < p + 2, the range where all four functionals are comparable."""
        return 0 < self.q < self.p + 2

    def with_q(self, q) -> "WeightParams":
        return replace(self, q=q)


@dataclass(frozen=True)
class Region:
    kind: Literal["full-ball", "euclidean-ball", "pseudo-ball", "annulus"] = "full-ball"
    radius: Optional[float] = None           # outer radius, or rho for a pseudo-ball
    inner: Optional[float] = None            # annulus only
    center: Optional[Tuple[complex, ...]] = None  # pseudo-ball only

    def __post_init__(self):
        if self.kind not in REGION_KINDS:
            raise ParameterError(f"Unknown region kind {self.kind!r}")
        if self.kind == "full-ball":
            return
        if self.radius is None or not 0.0 < self.radius <= 1.0:
            raise ParameterError(f"Region radius must lie in (0, 1], got {self.radius}")
        if self.kind == "annulus":
            if self.inner is None or not 0.0 <= self.inner < self.radius:
                raise ParameterError(f"Annulus needs 0 <= inner < radius, got inner={self.inner}")
        if self.kind == "pseudo-ball":
            if self.radius >= 1.0:
                raise ParameterError(f"Pseudo-ball radius must be < 1, got {self.radius}")
            if self.center is None:
                raise ParameterError("Pseudo-ball region needs a center")
            center = tuple(complex(c) for c in self.center)
            if sum(abs(c) ** 2 for c in center) >= 1.0:
                raise ParameterError("Pseudo-ball center must lie in the open unit ball")
            object.__setattr__(self, "center", center)

    @classmethod
    def full_ball(cls):
        return cls()

    @classmethod
    def euclidean_ball(cls, radius):
        return cls("euclidean-ball", radius=radius)

    @classmethod
    def annulus(cls, inner, radius):
        return cls("annulus", radius=radius, inner=inner)

    @classmethod
    def pseudo_ball(cls, center, rho):
        return cls("pseudo-ball", radius=rho, center=tuple(np.atleast_1d(np.asarray(center, dtype=complex))))

    def u_bounds(self) -> Tuple[float, float]:
        """Range of |z|^2 covered by a radially symmetric region."""
        if self.kind == "full-ball":
            return 0.0, 1.0
        if self.kind == "euclidean-ball":
            return 0.0, self.radius ** 2
        if self.kind == "annulus":
            return self.inner ** 2, self.radius ** 2
        raise ParameterError("Pseudo-balls are not radially symmetric")

    def describe(self) -> str:
        if self.kind == "full-ball":
            return "full-ball"
        if self.kind == "euclidean-ball":
            return f"euclidean-ball({self.radius!r})"
        if self.kind == "annulus":
            return f"annulus({self.inner!r},{self.radius!r})"
        coords = ",".join(_format_complex(c) for c in self.center)
        return f"pseudo-ball(({coords}),{self.radius!r})"

    @classmethod
    def parse(cls, text: str) -> "Region":
        text = text.strip()
        if text == "full-ball":
            return cls.full_ball()
        name, _, rest = text.partition("(")
        if not rest.endswith(")"):
            raise ParameterError(f"Cannot parse region {text!r}")
        body = rest[:-1]
        try:
            if name == "euclidean-ball":
                return cls.euclidean_ball(float(body))
            if name == "annulus":
                inner, outer = body.split(",")
                return cls.annulus(float(inner), float(outer))
            if name == "pseudo-ball":
                coords, _, rho = body.rpartition(",")
                values = [complex(c.strip().replace("i", "j")) for c in coords.strip("()").split(",")]
                return cls.pseudo_ball(values, float(rho))
        except ValueError as e:
            raise ParameterError(f"Cannot parse region {text!r}: {e}") from e
        raise ParameterError(f"Unknown region kind in {text!r}")


def _format_complex(c: complex) -> str:
    if c.imag == 0:
        return repr(c.real)
    return f"{c.real!r}{c.imag:+}i"


@dataclass(frozen=True)
class QuadratureSpec:
    method: Literal["product-rule", "monte-carlo", "stratified-mc"] = "product-rule"
    radial_order: int = 24        # Gauss-Jacobi nodes in u = |z|^2
    sphere_order: int = 6         # Gauss-Jacobi nodes per simplex coordinate
    angle_points: int = 8         # trapezoid nodes per coordinate phase
    sphere_samples: int = 4096
    mc_samples: int = 100_000
    strata: int = 16
    seed: int = 20060130
    region: Region = field(default_factory=Region)
    slice_order: int = 96         # radial nodes of one-variable disk reductions
    slice_angles: int = 2048

    def __post_init__(self):
        if self.method not in METHODS:
            raise ParameterError(f"Unknown quadrature method {self.method!r}; expected one of {METHODS}")
        for name in ("radial_order", "sphere_order", "angle_points", "sphere_samples",
                     "mc_samples", "strata", "slice_order", "slice_angles"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ParameterError(f"{name} must be a positive integer, got {value}")
        if not 0 <= self.seed < 2 ** 64:
            raise ParameterError(f"Seed must be a 64-bit unsigned integer, got {self.seed}")

    def replace(self, **changes) -> "QuadratureSpec":
        return replace(self, **changes)

    def to_mapping(self) -> dict:
        values = asdict(self)
        values["region"] = self.region.describe()
        return {key: str(value) for key, value in values.items()}

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, str]) -> "QuadratureSpec":
        kwargs = {}
        for key, raw in mapping.items():
            if key == "method":
                kwargs[key] = raw.strip()
            elif key == "region":
                kwargs[key] = Region.parse(raw)
            elif key in cls.__dataclass_fields__:
                try:
                    kwargs[key] = int(raw)
                except ValueError as e:
                    raise ParameterError(f"{key} must be an integer, got {raw!r}") from e
            else:
                raise ParameterError(f"Unknown quadrature key {key!r}")
        return cls(**kwargs)


@dataclass(frozen=True)
class IntegralEstimate:
    value: float
    stderr: float = 0.0         # 0 for deterministic rules
    samples_used: int = 0
    diverged: bool = False      # value is then a lower bound from a truncated region
    rejected: int = 0           # sample points dropped by the singular-point policy

    def __post_init__(self):
        if not self.stderr >= 0:
            raise ParameterError(f"Standard error must be nonnegative, got {self.stderr}")

    def scaled(self, factor: float) -> "IntegralEstimate":
        return replace(self, value=self.value * factor, stderr=self.stderr * abs(factor))

    def agrees_with(self, other, sigmas=3.0, atol=0.0, rtol=0.0) -> bool:
        if isinstance(other, IntegralEstimate):
            target, spread = other.value, np.hypot(self.stderr, other.stderr)
        else:
            target, spread = float(other), self.stderr
        return abs(self.value - target) <= sigmas * spread + atol + rtol * abs(target)

    def as_row(self) -> dict:
        return {
            "value": self.value,
            "stderr": self.stderr,
            "samples": self.samples_used,
            "diverged": int(self.diverged),
        }
