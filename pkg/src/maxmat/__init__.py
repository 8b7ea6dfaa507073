"""Matrix and biquaternion forms of Maxwell's equations, checked exactly."""

from .linalg import EXACT, APPROX, Gaussian, ModeError
from .symfield import LinPhase, SymScalar, FourPotential, SymEMField, ResourceLimitError

__all__ = [
    "APPROX",
    "EXACT",
    "FourPotential",
    "Gaussian",
    "LinPhase",
    "ModeError",
    "ResourceLimitError",
    "SymEMField",
    "SymScalar",
]

__version__ = "0.1.0"
