from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "bcml._speedups",
                ["src/bcml/_speedups.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython: the pure-Python kernels in bcml._purekernels take over.
    ext_modules = []

setup(ext_modules=ext_modules)
