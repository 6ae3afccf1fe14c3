"""The bicomplex Mittag-Leffler distribution.

Density over the positive real ray (componentwise in idempotent
coordinates):

    F(xi) = (1 + a) * exp(-xi) * E_alpha(-a * xi**alpha),

with bicomplex mixing parameter a (1 + a must avoid the null cone) and
Mittag-Leffler order alpha.  Non-negativity of F is deliberately not
enforced: the distribution takes bicomplex "probability" values.

Closed forms implemented here:

    MGF       M(t)  = (1+a) (1-t)**(alpha-1) / (a + (1-t)**alpha)
    moments   mu_r' for r = 0..4 (polynomial in alpha, rational in a)
    mean      1 - a*alpha/(1+a)
    variance  1 - a*alpha/(1+a) - a*alpha**2/(1+a)**2

Everything acts componentwise on the idempotent coordinates; the scalar
helpers _moment_scalar / _mgf_scalar are shared with the oracles module.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .bicomplex import EPS_NULL, Bicomplex, NullConeError
from .special import (DEFAULT_MAX_TERMS, DEFAULT_TOL, AlphaParam, EvalResult,
                      ml_complex, validate_alpha)


class InvalidParameterError(ValueError):
    """Distribution parameters violate their validity conditions."""


@dataclass(frozen=True)
class MLDistParams:
    """Parameter pack (a, alpha) for the distribution."""

    a: Bicomplex
    alpha: Bicomplex

    def __post_init__(self):
        object.__setattr__(self, "a", Bicomplex.coerce(self.a))
        object.__setattr__(self, "alpha", Bicomplex.coerce(self.alpha))
        if (self.a + 1).is_null_cone():
            raise InvalidParameterError(
                "1 + a lies on the null cone; closed forms divide by (1+a)")
        ok, diag = validate_alpha(self.alpha)
        if not ok:
            raise InvalidParameterError(
                "invalid alpha: " + diag["idempotent_form"])

    def idempotent(self) -> tuple[tuple[complex, complex],
                                  tuple[complex, complex]]:
        """((a1, a2), (alpha1, alpha2)) idempotent components."""
        return tuple(self.a.to_idempotent()), tuple(self.alpha.to_idempotent())

    def is_real(self, tol: float = 1e-14) -> bool:
        """True when all idempotent components of a and alpha are real."""
        (a1, a2), (l1, l2) = self.idempotent()
        return all(abs(c.imag) <= tol for c in (a1, a2, l1, l2))


@dataclass(frozen=True)
class MgfResult:
    """Closed-form MGF value plus the series-region flag.

    in_convergence_region is False when |a/(1-t)**alpha| >= 1 in some
    idempotent component; the value returned there is the analytic
    continuation of the defining series.
    """

    value: Bicomplex
    in_convergence_region: bool


def pdf(xi, p: MLDistParams, tol: float = DEFAULT_TOL,
        max_terms: int = DEFAULT_MAX_TERMS) -> EvalResult:
    """Density F(xi) = (1+a) exp(-xi) E_alpha(-a xi**alpha)."""
    xi = Bicomplex.coerce(xi)
    (a1, a2), (l1, l2) = p.idempotent()
    x1, x2 = xi.to_idempotent()

    value1, d1 = _pdf_scalar(x1, a1, l1, tol, max_terms)
    value2, d2 = _pdf_scalar(x2, a2, l2, tol, max_terms)
    return EvalResult(
        Bicomplex.from_idempotent(value1, value2),
        max(d1.terms_used, d2.terms_used),
        max(d1.error_estimate, d2.error_estimate),
        d1.converged and d2.converged,
    )


def _pdf_scalar(x: complex, a: complex, alpha: complex,
                tol: float, max_terms: int) -> tuple[complex, EvalResult]:
    if x == 0:
        # xi**alpha -> 0 (Re alpha > 0), so E(0) = 1.
        trivial = EvalResult(1.0 + 0j, 1, 0.0, True)
        return (1.0 + a), trivial
    w = -a * cmath.exp(alpha * cmath.log(x))
    res = ml_complex(alpha, w, tol, max_terms)
    return (1.0 + a) * cmath.exp(-x) * res.value, res


def _mgf_scalar(t, a, alpha, one=1.0):
    """Scalar-component MGF; `one` selects the arithmetic (float/mpmath).

    Returns (value, in_region).  Raises NullConeError when 1-t or the
    denominator a + (1-t)**alpha vanishes.
    """
    u = one - t
    if abs(u) <= EPS_NULL:
        raise NullConeError("1 - t vanishes in an idempotent component")
    s = u ** alpha
    denom = a + s
    if abs(denom) <= EPS_NULL * max(1.0, abs(a), abs(s)):
        raise NullConeError(
            "a + (1-t)**alpha vanishes in an idempotent component")
    in_region = abs(a) < abs(s)
    return (one + a) * s / u / denom, in_region


def mgf(t, p: MLDistParams) -> MgfResult:
    """Closed-form moment generating function (componentwise)."""
    t = Bicomplex.coerce(t)
    (a1, a2), (l1, l2) = p.idempotent()
    t1, t2 = t.to_idempotent()
    v1, ok1 = _mgf_scalar(t1, a1, l1, one=1.0 + 0j)
    v2, ok2 = _mgf_scalar(t2, a2, l2, one=1.0 + 0j)
    return MgfResult(Bicomplex.from_idempotent(v1, v2), ok1 and ok2)


def _moment_scalar(r: int, a, alpha):
    """Raw moment mu_r' for scalar (complex or mpmath) a, alpha."""
    b = 1 + a
    if r == 0:
        return 1 + 0 * a
    if r == 1:
        return 1 - a * alpha / b
    if r == 2:
        return 2 - 3 * a * alpha / b + a * (a - 1) * alpha ** 2 / b ** 2
    if r == 3:
        return (6 - 11 * a * alpha / b
                + 6 * a * (a - 1) * alpha ** 2 / b ** 2
                - a * (a * a - 4 * a + 1) * alpha ** 3 / b ** 3)
    if r == 4:
        return (24 - 50 * a * alpha / b
                + 35 * a * (a - 1) * alpha ** 2 / b ** 2
                - 10 * a * (a * a - 4 * a + 1) * alpha ** 3 / b ** 3
                + a * (a ** 3 - 11 * a * a + 11 * a - 1) * alpha ** 4 / b ** 4)
    raise ValueError(f"moment order must be in 0..4, got {r}")


def moment(r: int, p: MLDistParams) -> Bicomplex:
    """Raw moment mu_r' = E(xi**r), closed form, r in 0..4."""
    if not isinstance(r, int) or not 0 <= r <= 4:
        raise ValueError(f"moment order must be an integer in 0..4, got {r!r}")
    (a1, a2), (l1, l2) = p.idempotent()
    return Bicomplex.from_idempotent(_moment_scalar(r, a1, l1),
                                     _moment_scalar(r, a2, l2))


def mean(p: MLDistParams) -> Bicomplex:
    """Mean = 1 - a*alpha/(1+a)."""
    return moment(1, p)


def _variance_scalar(a, alpha):
    b = 1 + a
    return 1 - a * alpha / b - a * alpha ** 2 / b ** 2


def variance(p: MLDistParams) -> Bicomplex:
    """Variance = 1 - a*alpha/(1+a) - a*alpha**2/(1+a)**2 (closed form)."""
    (a1, a2), (l1, l2) = p.idempotent()
    return Bicomplex.from_idempotent(_variance_scalar(a1, l1),
                                     _variance_scalar(a2, l2))
