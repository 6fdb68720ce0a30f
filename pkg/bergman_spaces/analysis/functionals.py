"""The four comparable functionals of a holomorphic function.

    I1 = int |f|^p dv_alpha
    I2 = int |f|^(p-q) [(1-|z|^2) |Rf|]^q dv_alpha
    I3 = int |f|^(p-q) [(1-|z|^2) |grad f|]^q dv_alpha
    I4 = int |f|^(p-q) |invariant grad f|^q dv_alpha

All four are computed from one set of nodes, so I2 <= I3 <= I4 holds sample by sample.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import ParameterError
from ..core.holo_base import HoloFunction
from ..core.params import IntegralEstimate, QuadratureSpec, WeightParams
from ..functions.derivatives import derivative_fields
from ..quadrature.measures import WeightedMeasure
from ..quadrature.rules import integrate_ball_many

logger = logging.getLogger(__name__)


def modulus_power(modulus: np.ndarray, exponent: float) -> np.ndarray:
    """|f|^exponent with the limits at |f| = 0 fixed: 0, 1 or +inf."""
    modulus = np.asarray(modulus, dtype=float)
    out = np.empty(modulus.shape)
    positive = modulus > 0
    out[positive] = np.exp(exponent * np.log(modulus[positive]))
    if exponent > 0:
        out[~positive] = 0.0
    elif exponent == 0:
        out[~positive] = 1.0
    else:
        out[~positive] = np.inf
    return out


def _check_dimension(f: HoloFunction, params: WeightParams):
    if f.n != params.n:
        raise ParameterError(f"Function of {f.n} variables used with parameters for n={params.n}")


def functional_integrands(f: HoloFunction, params: WeightParams):
    """Integrand of (I1, I2, I3, I4) as one callable returning an (N, 4) array."""
    p, q = params.p, params.q

    def integrand(points):
        fields = derivative_fields(f, points)
        prefactor = modulus_power(fields.modulus, p - q)
        with np.errstate(invalid="ignore"):
            return np.stack([
                modulus_power(fields.modulus, p),
                prefactor * (fields.one_minus_sq * fields.radial) ** q,
                prefactor * (fields.one_minus_sq * fields.gradient) ** q,
                prefactor * fields.invariant ** q,
            ], axis=-1)

    return integrand


def evaluate_functionals(f: HoloFunction, params: WeightParams,
                         spec: QuadratureSpec = QuadratureSpec()) -> Tuple[IntegralEstimate, ...]:
    _check_dimension(f, params)
    if not params.in_range:
        logger.info("q=%g is outside 0 < q < p+2 for p=%g; values are reported but flagged", params.q, params.p)
    return tuple(integrate_ball_many(functional_integrands(f, params), WeightedMeasure(params.n, params.alpha), spec))


def I1(f, params, spec=QuadratureSpec()) -> IntegralEstimate:
    return evaluate_functionals(f, params, spec)[0]


def I2(f, params, spec=QuadratureSpec()) -> IntegralEstimate:
    return evaluate_functionals(f, params, spec)[1]


def I3(f, params, spec=QuadratureSpec()) -> IntegralEstimate:
    return evaluate_functionals(f, params, spec)[2]


def I4(f, params, spec=QuadratureSpec()) -> IntegralEstimate:
    return evaluate_functionals(f, params, spec)[3]


def theorem1_quantities(f, params, spec=QuadratureSpec()) -> Tuple[IntegralEstimate, IntegralEstimate, IntegralEstimate]:
    """Integrals of [(1-|z|^2)|Rf|]^p, [(1-|z|^2)|grad f|]^p and |invariant grad f|^p."""
    return evaluate_functionals(f, params.with_q(params.p), spec)[1:]


def partial_integrals(f, params, spec=QuadratureSpec()) -> List[IntegralEstimate]:
    """Coordinate-wise variant: int |f|^(p-q) [(1-|z|^2) |df/dz_k|]^q dv_alpha for each k."""
    _check_dimension(f, params)
    p, q = params.p, params.q

    def integrand(points):
        fields = derivative_fields(f, points)
        prefactor = modulus_power(fields.modulus, p - q)
        with np.errstate(invalid="ignore"):
            return prefactor[:, None] * (fields.one_minus_sq[:, None] * np.abs(fields.partials)) ** q

    return integrate_ball_many(integrand, WeightedMeasure(params.n, params.alpha), spec)


def origin_power(f: HoloFunction, p: float) -> float:
    return float(abs(f(np.zeros(f.n))) ** p)


@dataclass
class ComparabilityRow:
    label: str
    f0_power: float
    estimates: Tuple[IntegralEstimate, IntegralEstimate, IntegralEstimate, IntegralEstimate]

    def ratios(self) -> Optional[Tuple[float, float, float]]:
        """(|f(0)|^p + I_k) / I1 for k = 2, 3, 4; None when I1 vanishes."""
        i1 = self.estimates[0].value
        if i1 <= 0:
            return None
        return tuple((self.f0_power + e.value) / i1 for e in self.estimates[1:])


@dataclass
class ComparabilityReport:
    params: WeightParams
    rows: List[ComparabilityRow] = field(default_factory=list)

    @property
    def in_range(self) -> bool:
        return self.params.in_range

    @property
    def summary(self) -> Dict[int, Tuple[float, float]]:
        """k -> (min, max) of (|f(0)|^p + I_k) / I1 over the family."""
        out = {}
        ratios = [r.ratios() for r in self.rows if r.ratios() is not None]
        for position, k in enumerate((2, 3, 4)):
            values = [r[position] for r in ratios]
            if values:
                out[k] = (min(values), max(values))
        return out

    def envelope(self) -> Optional[Tuple[float, float]]:
        bounds = self.summary.values()
        if not bounds:
            return None
        return min(b[0] for b in bounds), max(b[1] for b in bounds)


def comparability_report(family: Sequence[HoloFunction], params: WeightParams,
                         spec: QuadratureSpec = QuadratureSpec(),
                         labels: Optional[Sequence[str]] = None) -> ComparabilityReport:
    if labels is None:
        labels = [f.describe() for f in family]
    report = ComparabilityReport(params)
    for label, f in zip(labels, family):
        estimates = evaluate_functionals(f, params, spec)
        if estimates[0].value <= 0:
            logger.info("I1 vanishes for %s; excluded from ratios", label)
        report.rows.append(ComparabilityRow(label, origin_power(f, params.p), estimates))
    return report
