"""Build script for the optional compiled enumeration/sampling kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time); the extension just makes exhaustive
enumeration and Monte Carlo sampling orders of magnitude faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "ncardpoker._speedups",
                ["src/ncardpoker/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
