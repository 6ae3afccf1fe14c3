# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled numeric kernels; behavioural twin of bcml._purekernels."""

from libc.math cimport lgamma as c_lgamma, log, exp, sqrt, cos, M_PI, INFINITY

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double complex clog(double complex)
    double complex csin(double complex)
    double complex cpow(double complex, double complex)
    double cabs(double complex)
    double creal(double complex)
    double cimag(double complex)

BACKEND_NAME = "compiled"

cdef double LANCZOS_G = 7.0
cdef double[9] LANCZOS
LANCZOS[0] = 0.99999999999980993
LANCZOS[1] = 676.5203681218851
LANCZOS[2] = -1259.1392167224028
LANCZOS[3] = 771.32342877765313
LANCZOS[4] = -176.61502916214059
LANCZOS[5] = 12.507343278686905
LANCZOS[6] = -0.13857109526572012
LANCZOS[7] = 9.9843695780195716e-6
LANCZOS[8] = 1.5056327351493116e-7

cdef double HALF_LOG_TWO_PI = 0.5 * log(2.0 * M_PI)


cdef inline double complex _lanczos_sum(double complex z) nogil:
    cdef double complex s = LANCZOS[0]
    cdef int i
    for i in range(1, 9):
        s = s + LANCZOS[i] / (z + i)
    return s


cdef double complex _clgamma(double complex z) nogil:
    cdef double complex w, t
    if cimag(z) == 0.0 and creal(z) > 0.0:
        return c_lgamma(creal(z))
    w = z - 1.0
    t = w + LANCZOS_G + 0.5
    return HALF_LOG_TWO_PI + (w + 0.5) * clog(t) - t + clog(_lanczos_sum(w))


cdef double complex _cgamma(double complex z) nogil:
    cdef double complex w, t
    if creal(z) < 0.5:
        return M_PI / (csin(M_PI * z) * _cgamma(1.0 - z))
    w = z - 1.0
    t = w + LANCZOS_G + 0.5
    return sqrt(2.0 * M_PI) * cpow(t, w + 0.5) * cexp(-t) * _lanczos_sum(w)


def lgamma_complex(z):
    """Log-gamma for Re(z) >= 0.5, up to a multiple of 2*pi*i."""
    return complex(_clgamma(z))


def gamma_complex(z):
    """Gamma via Lanczos (g=7, 9 coefficients) with reflection for Re < 0.5."""
    return complex(_cgamma(z))


def ml_series(alpha, z, double tol, int max_terms):
    """Partial sum of sum_k z**k / Gamma(alpha*k + 1).

    Same contract as bcml._purekernels.ml_series: terms in log space,
    stop after three consecutive terms below tol*max(1, |sum|); returns
    (value, terms_used, error_estimate, converged).
    """
    cdef double complex ca = alpha
    cdef double complex cz = z
    cdef double complex logz, term, total, lg
    cdef double log_abs_z, mag, ex
    cdef int k = 0, small = 0
    cdef bint real_path

    if cz == 0:
        return 1.0 + 0j, 1, 0.0, True

    real_path = cimag(ca) == 0.0 and cimag(cz) == 0.0

    # Elementary reductions for integer orders where the alternating
    # series is cancellation-limited; mirrors _purekernels.ml_series.
    if real_path and creal(cz) < -6.0 and ca == 1.0:
        return complex(exp(creal(cz))), 1, 0.0, True
    if real_path and creal(cz) < -36.0 and ca == 2.0:
        return complex(cos(sqrt(-creal(cz)))), 1, 0.0, True

    logz = clog(cz)
    log_abs_z = creal(logz)
    total = 0

    while k < max_terms:
        lg = _clgamma(ca * k + 1.0)
        if (k * log_abs_z - creal(lg)) > 700.0:
            small = 0
            break
        if real_path:
            mag = exp(k * log_abs_z - creal(lg))
            if creal(cz) > 0 or k % 2 == 0:
                term = mag
            else:
                term = -mag
        else:
            term = cexp(k * logz - lg)
        total = total + term
        if cabs(term) < tol * max(1.0, cabs(total)):
            small += 1
            if small >= 3:
                k += 1
                break
        else:
            small = 0
        k += 1

    cdef bint converged = small >= 3
    lg = _clgamma(ca * k + 1.0)
    ex = k * log_abs_z - creal(lg)
    cdef double error_estimate = INFINITY if ex > 700.0 else exp(ex)
    return complex(total), k, error_estimate, converged
