"""Kernel backend selection.

The compiled Cython kernels (bcml._speedups) are preferred when the
extension built; otherwise the pure-Python twins take over.  Setting the
environment variable BCML_PURE=1 forces the pure backend, which the
benchmark script uses to compare the two.
"""

import os

if os.environ.get("BCML_PURE", "") not in ("", "0"):
    from . import _purekernels as kernels
else:
    try:
        from . import _speedups as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _purekernels as kernels  # type: ignore[no-redef]

BACKEND = kernels.BACKEND_NAME

gamma_kernel = kernels.gamma_complex
lgamma_kernel = kernels.lgamma_complex
ml_series_kernel = kernels.ml_series
