"""Complex gamma and the Mittag-Leffler function, complex and bicomplex.

The Mittag-Leffler function of order alpha,

    E_alpha(z) = sum_k z**k / Gamma(alpha*k + 1),

generalizes the exponential (alpha = 1).  For bicomplex alpha and
argument it is evaluated componentwise in idempotent coordinates, which
requires Re(alpha_1) > 0 and Re(alpha_2) > 0 (equivalently
|x3(alpha)| < x0(alpha) for the real part / hyperbolic part of alpha).
"""

from __future__ import annotations

from dataclasses import dataclass

from .backend import gamma_kernel, lgamma_kernel, ml_series_kernel
from .bicomplex import Bicomplex

DEFAULT_TOL = 1e-12
DEFAULT_MAX_TERMS = 10_000


class PoleError(ArithmeticError):
    """Gamma evaluated at (numerically) a non-positive integer."""


class NotConvergedError(RuntimeError):
    """Raised by callers that refuse a non-converged series result."""


@dataclass(frozen=True)
class EvalResult:
    """A series evaluation plus truncation diagnostics.

    terms_used and error_estimate are per-component maxima when the
    value is bicomplex; error_estimate is the magnitude of the first
    discarded series term.
    """

    value: object  # complex or Bicomplex
    terms_used: int
    error_estimate: float
    converged: bool


def validate_alpha(alpha) -> tuple[bool, dict]:
    """Check |x3(alpha)| < x0(alpha), i.e. both idempotent real parts > 0.

    Returns (ok, diagnostic) where the diagnostic reports the condition
    in both coordinate systems.
    """
    alpha = Bicomplex.coerce(alpha)
    a1, a2 = alpha.to_idempotent()
    ok = a1.real > 0.0 and a2.real > 0.0
    diagnostic = {
        "hyperbolic_form": f"|x3| < x0: |{alpha.x3:g}| < {alpha.x0:g} is "
                           f"{abs(alpha.x3) < alpha.x0}",
        "idempotent_form": f"Re(alpha1) = {a1.real:g} > 0 and "
                           f"Re(alpha2) = {a2.real:g} > 0 is {ok}",
    }
    return ok, diagnostic


@dataclass(frozen=True)
class AlphaParam:
    """Validated Mittag-Leffler order parameter."""

    alpha: Bicomplex

    def __post_init__(self):
        object.__setattr__(self, "alpha", Bicomplex.coerce(self.alpha))
        ok, diag = validate_alpha(self.alpha)
        if not ok:
            raise ValueError(
                "invalid Mittag-Leffler order: " + diag["idempotent_form"])

    def idempotent(self) -> tuple[complex, complex]:
        return tuple(self.alpha.to_idempotent())


def gamma_complex(z: complex) -> complex:
    """Gamma function for complex argument (Lanczos g=7, 9 coefficients)."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and abs(z.real - round(z.real)) < 1e-12:
        raise PoleError(f"gamma pole at non-positive integer {z.real:g}")
    return gamma_kernel(z)


def lgamma_complex(z: complex) -> complex:
    """Log-gamma for Re(z) >= 0.5, up to a multiple of 2*pi*i."""
    return lgamma_kernel(complex(z))


def ml_complex(alpha: complex, z: complex, tol: float = DEFAULT_TOL,
               max_terms: int = DEFAULT_MAX_TERMS) -> EvalResult:
    """One-parameter Mittag-Leffler function for complex order/argument."""
    alpha = complex(alpha)
    if alpha.real <= 0.0:
        raise ValueError(f"Re(alpha) must be positive, got {alpha}")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    value, terms, err, converged = ml_series_kernel(alpha, complex(z),
                                                    tol, max_terms)
    return EvalResult(value, terms, err, converged)


def ml_bicomplex(alpha, xi, tol: float = DEFAULT_TOL,
                 max_terms: int = DEFAULT_MAX_TERMS) -> EvalResult:
    """Bicomplex Mittag-Leffler function, componentwise:

        E_alpha(xi) = E_alpha1(xi1) e1 + E_alpha2(xi2) e2.

    Diagnostics are merged by taking the worse of the two components.
    """
    if not isinstance(alpha, AlphaParam):
        alpha = AlphaParam(Bicomplex.coerce(alpha))
    xi = Bicomplex.coerce(xi)
    a1, a2 = alpha.idempotent()
    x1, x2 = xi.to_idempotent()
    try:
        r1 = ml_complex(a1, x1, tol, max_terms)
    except ValueError as exc:
        raise ValueError(f"component xi1: {exc}") from exc
    try:
        r2 = ml_complex(a2, x2, tol, max_terms)
    except ValueError as exc:
        raise ValueError(f"component xi2: {exc}") from exc
    return EvalResult(
        Bicomplex.from_idempotent(r1.value, r2.value),
        max(r1.terms_used, r2.terms_used),
        max(r1.error_estimate, r2.error_estimate),
        r1.converged and r2.converged,
    )
