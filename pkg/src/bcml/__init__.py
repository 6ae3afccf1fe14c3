"""Bicomplex Mittag-Leffler distribution library."""

from .backend import BACKEND
from .bicomplex import (E1, E2, ONE, ZERO, Bicomplex, DomainError,
                        IdempotentPair, NullConeError)
from .distribution import (InvalidParameterError, MgfResult, MLDistParams,
                           mean, mgf, moment, pdf, variance)
from .special import (AlphaParam, EvalResult, NotConvergedError, PoleError,
                      gamma_complex, lgamma_complex, ml_bicomplex, ml_complex,
                      validate_alpha)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Bicomplex", "IdempotentPair", "E1", "E2", "ONE", "ZERO",
    "NullConeError", "DomainError", "PoleError", "NotConvergedError",
    "InvalidParameterError", "AlphaParam", "EvalResult", "MgfResult",
    "MLDistParams", "gamma_complex", "lgamma_complex", "ml_complex",
    "ml_bicomplex", "validate_alpha", "pdf", "mgf", "moment", "mean",
    "variance", "__version__",
]
