"""Pure-Python numeric kernels.

These are the hot inner loops of the library: the complex gamma /
log-gamma functions (Lanczos, g = 7, 9 coefficients) and the one
parameter Mittag-Leffler series.  bcml.backend swaps in the compiled
Cython twin (bcml._speedups) when it is available; both implementations
must stay behaviourally identical, which tests/test_backends.py checks.
"""

from __future__ import annotations

import cmath
import math

BACKEND_NAME = "pure"

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _lanczos_sum(z: complex) -> complex:
    s = _LANCZOS[0]
    for i in range(1, 9):
        s += _LANCZOS[i] / (z + i)
    return s


def lgamma_complex(z: complex) -> complex:
    """Log-gamma for Re(z) >= 0.5, up to a multiple of 2*pi*i.

    The imaginary part is not reduced to the principal branch; callers
    only ever exponentiate the result, where a 2*pi*i offset is
    invisible.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real > 0.0:
        # C-library lgamma is good to ~1 ulp, noticeably better than the
        # Lanczos sum; real arguments dominate in practice.
        return complex(math.lgamma(z.real))
    w = z - 1.0
    t = w + _LANCZOS_G + 0.5
    return (_HALF_LOG_TWO_PI + (w + 0.5) * cmath.log(t) - t
            + cmath.log(_lanczos_sum(w)))


def gamma_complex(z: complex) -> complex:
    """Gamma via Lanczos (g=7, 9 coefficients) with reflection for Re < 0.5."""
    z = complex(z)
    if z.real < 0.5:
        s = cmath.sin(cmath.pi * z)
        return cmath.pi / (s * gamma_complex(1.0 - z))
    w = z - 1.0
    t = w + _LANCZOS_G + 0.5
    return (math.sqrt(2.0 * math.pi) * t ** (w + 0.5) * cmath.exp(-t)
            * _lanczos_sum(w))


def ml_series(alpha: complex, z: complex,
              tol: float, max_terms: int) -> tuple[complex, int, float, bool]:
    """Partial sum of sum_k z**k / Gamma(alpha*k + 1).

    Terms are formed in log space, exp(k*Log z - lgamma(alpha*k + 1)),
    so that Gamma overflow near alpha*k ~ 170 cannot occur.  Summation
    stops once three consecutive terms are below tol relative to
    max(1, |partial sum|).

    Returns (value, terms_used, error_estimate, converged) where the
    error estimate is the magnitude of the first term not added.
    """
    alpha = complex(alpha)
    z = complex(z)
    if z == 0:
        return 1.0 + 0j, 1, 0.0, True

    real_path = alpha.imag == 0.0 and z.imag == 0.0

    # The alternating series on the negative real axis loses about
    # |z|*log10(e) digits to cancellation.  For the two integer orders
    # with exact elementary forms, switch to them once the series would
    # drop below ~10 good digits; inside the threshold the series is
    # both accurate and the primitive under test.
    if real_path and z.real < -6.0 and alpha == 1.0:
        return complex(math.exp(z.real)), 1, 0.0, True
    if real_path and z.real < -36.0 and alpha == 2.0:
        return complex(math.cos(math.sqrt(-z.real))), 1, 0.0, True

    logz = cmath.log(z)
    log_abs_z = logz.real

    total = 0j
    small = 0
    k = 0
    while k < max_terms:
        lg = lgamma_complex(alpha * k + 1.0)
        if (k * log_abs_z - lg.real) > 700.0:
            # Term would overflow; bail out and report non-convergence.
            small = 0
            break
        if real_path:
            # Real alpha, real z: keep the term real to the last ulp
            # (the complex exp would inject a spurious imaginary part
            # for negative z through k*log(-|z|)).
            mag = math.exp(k * log_abs_z - lg.real)
            term = complex(mag if (z.real > 0 or k % 2 == 0) else -mag)
        else:
            term = cmath.exp(k * logz - lg)
        total += term
        if abs(term) < tol * max(1.0, abs(total)):
            small += 1
            if small >= 3:
                k += 1
                break
        else:
            small = 0
        k += 1

    converged = small >= 3
    next_lg = lgamma_complex(alpha * k + 1.0)
    ex = k * log_abs_z - next_lg.real
    error_estimate = math.inf if ex > 700.0 else math.exp(ex)
    return total, k, error_estimate, converged
