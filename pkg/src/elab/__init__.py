"""First-principles constructions of the number e, cross-verified.

Subpackages build the natural exponential base from scratch along every
classical route: dyadic-exponent powers with certified enclosures, one-sided
slope brackets, the compound-interest limit with an exact-rational oracle,
factorial and binomial series with computable truncation certificates,
tangent-line stepping for y' = y, and the logarithm as the inverse of the
series exponential.  Each route is tested against the others rather than
against any library transcendental.
"""

from .config import CONFIG, LabConfig
from .limits import BigRational, ConvergenceRecord
from .powcore import DyadicExponent, Enclosure
from .series import ComplexValue, SeriesState

__version__ = "0.1.0"

__all__ = [
    "CONFIG",
    "LabConfig",
    "BigRational",
    "ConvergenceRecord",
    "DyadicExponent",
    "Enclosure",
    "ComplexValue",
    "SeriesState",
    "__version__",
]
