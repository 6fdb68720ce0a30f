"""Numerical characterizations of weighted Bergman spaces on the unit ball of C^n."""
import logging

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())

from .core.errors import (  # noqa: E402
    BergmanError,
    ConfigError,
    DescriptorError,
    DimensionError,
    DomainError,
    NumericError,
    ParameterError,
    SingularityError,
)
from .core.holo_base import HoloFunction  # noqa: E402
from .core.params import IntegralEstimate, QuadratureSpec, Region, WeightParams  # noqa: E402
from .functions.descriptor import parse_function  # noqa: E402
from .functions.kernel_power import KernelPower  # noqa: E402
from .functions.polynomial import Polynomial  # noqa: E402
from .quadrature.measures import WeightedMeasure  # noqa: E402
from .quadrature.rules import integrate_ball  # noqa: E402
