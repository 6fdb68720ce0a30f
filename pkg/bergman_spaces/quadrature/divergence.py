"""Growth classification of truncated integrals V(eps) as eps -> 0."""
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..core.errors import NumericError, ParameterError

logger = logging.getLogger(__name__)

CONVERGENT = "convergent"
LOG_DIVERGENT = "log-divergent"
POWER_DIVERGENT = "power-divergent"

# Increment exponents kappa with |kappa| <= GROWTH_TOLERANCE are all reported as
# log-divergent: the fit cannot tell eps^0.1 from eps^0 over a dozen halvings,
# so exponents within this band of a critical value are not resolved.
GROWTH_TOLERANCE = 0.15
_FLOOR = 1e-300


def halving_cutoffs(first: int = 3, last: int = 16):
    """eps = 2^-first, ..., 2^-last."""
    if not 0 <= first < last:
        raise ParameterError(f"Need 0 <= first < last, got {first}, {last}")
    return [2.0 ** -k for k in range(first, last + 1)]


@dataclass(frozen=True)
class GrowthFit:
    classification: str
    increment_slope: float  # slope of log(V(eps_{k+1}) - V(eps_k)) against ln(1/eps)
    log_slope: float        # slope of V against ln(1/eps) over the tail

    @property
    def diverged(self) -> bool:
        return self.classification != CONVERGENT


def classify_growth(cutoffs: Sequence[float], values: Sequence[float],
                    tolerance: float = GROWTH_TOLERANCE, tail: int = 6) -> GrowthFit:
    """Fit the decay of successive increments of a truncation sequence.

    Increments behaving like eps^kappa mean convergence for kappa > 0, a log
    divergence for kappa = 0 and a power divergence for kappa < 0; the fitted
    slope is -kappa. Exponents with |kappa| <= ``tolerance`` count as log-divergent.
    """
    eps = np.asarray(cutoffs, dtype=float)
    vals = np.asarray(values, dtype=float)
    if eps.shape != vals.shape or eps.size < 3:
        raise ParameterError("Need at least three matching cutoffs and values")
    if not np.all(np.isfinite(vals)):
        raise NumericError("Truncated integrals are not finite", {"values": vals.tolist()})
    order = np.argsort(-eps)
    eps, vals = eps[order], vals[order]
    tail = min(tail, eps.size - 1)
    increments = np.maximum(np.diff(vals), _FLOOR)
    x = np.log(1.0 / eps[1:])[-tail:]
    slope = float(np.polyfit(x, np.log(increments)[-tail:], 1)[0])
    log_slope = float(np.polyfit(np.log(1.0 / eps[-tail:]), vals[-tail:], 1)[0])
    if slope < -tolerance:
        classification = CONVERGENT
    elif slope <= tolerance:
        classification = LOG_DIVERGENT
    else:
        classification = POWER_DIVERGENT
    logger.debug("growth fit: slope=%.4f log_slope=%.4f -> %s", slope, log_slope, classification)
    return GrowthFit(classification, slope, log_slope)
